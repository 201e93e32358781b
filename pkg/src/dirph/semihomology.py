"""Desk-scale homology over the naturals.

Homology over a zerosumfree semiring is a quotient by a congruence rather
than by a subgroup: two cycles x, y are homologous when

    x + d+(u) + d-(v) == y + d+(v) + d-(u)

for some higher chains u, v.  There is no basis theory for the quotient, so
the tools here are exact but bounded: witness search enumerates coefficient
vectors up to a cap and a negative answer within the cap is inconclusive by
design.  What is *not* bounded: the rank of the degree-0 homology equals the
number of weakly connected components, even-dimensional cycles do not exist
at all, and degree-1 cycles are generated by the elementary circuits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .chains import Chain, boundary_neg, boundary_pos, is_cycle
from .complexes import DirectedComplex, close, weak_components
from .directed import DEFAULT_CIRCUIT_BUDGET, elementary_circuits
from .errors import ResourceBudgetExceeded

DEFAULT_HOMOLOGOUS_BOUND = 3
DEFAULT_SEARCH_BUDGET = 2_000_000


def h0_rank(x: DirectedComplex) -> int:
    """Rank of the 0th homology semimodule: the weak component count."""
    return len(weak_components(x))


@dataclass(frozen=True)
class HomologousWitness:
    """Chains u, v certifying x + d+(u) + d-(v) == y + d+(v) + d-(u)."""

    u: Chain
    v: Chain

    def certifies(self, x: Chain, y: Chain) -> bool:
        lhs = x + boundary_pos(self.u) + boundary_neg(self.v)
        rhs = y + boundary_pos(self.v) + boundary_neg(self.u)
        return lhs == rhs


def is_homologous(
    x: DirectedComplex,
    a: Chain,
    b: Chain,
    bound: int = DEFAULT_HOMOLOGOUS_BOUND,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> HomologousWitness | None:
    """Search for a homology witness between two natural cycles.

    The search is exhaustive over pairs (u, v) of (n+1)-chains with
    coefficients in 0..bound, so a witness is definitive while ``None`` only
    means "none within the bound", not a proof of non-homologousness.
    """
    if a.dimension != b.dimension:
        raise ValueError("cycles must share a dimension")
    if not (a.is_natural() and b.is_natural()):
        raise ValueError("witness search works over natural coefficients")
    if not (is_cycle(a) and is_cycle(b)):
        raise ValueError("both chains must be cycles")
    n = a.dimension
    carriers = x.simplices(n + 1)
    k = len(carriers)
    space = (bound + 1) ** (2 * k)
    if space > search_budget:
        raise ResourceBudgetExceeded(
            f"witness search space {space} exceeds budget {search_budget}", count=space
        )
    coefficient_range = range(bound + 1)
    for u_coeffs in product(coefficient_range, repeat=k):
        u = Chain(n + 1, dict(zip(carriers, u_coeffs)))
        left_u = boundary_pos(u)
        right_u = boundary_neg(u)
        for v_coeffs in product(coefficient_range, repeat=k):
            v = Chain(n + 1, dict(zip(carriers, v_coeffs)))
            if a + left_u + boundary_neg(v) == b + boundary_pos(v) + right_u:
                return HomologousWitness(u=u, v=v)
    return None


def z1_generators(
    x: DirectedComplex, circuit_budget: int = DEFAULT_CIRCUIT_BUDGET
) -> list[Chain]:
    """Elementary circuits of the 1-skeleton as natural chains.

    Every natural 1-cycle is a non-negative circulation on the digraph of
    1-simplices and therefore decomposes as a natural combination of these
    circuits (self-loops and 2-vertex circuits included).
    """
    return elementary_circuits(list(x.simplices(1)), circuit_budget)


def even_cycles_trivial(
    x: DirectedComplex,
    dim: int,
    bound: int,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> bool:
    """Verify there is no nonzero natural cycle in an even dimension >= 2.

    Two independent checks: the counting functional (an elementary chain of
    even dimension n has one more positive than negative face, so any cycle
    has zero coefficient sum, hence is zero over the naturals), and a direct
    enumeration of coefficient vectors up to ``bound``.
    """
    if dim < 2 or dim % 2 != 0:
        raise ValueError("dim must be an even integer >= 2")
    carriers = x.simplices(dim)
    for s in carriers:
        e = Chain.elementary(s)
        pos_terms = boundary_pos(e).coefficient_sum()
        neg_terms = boundary_neg(e).coefficient_sum()
        if pos_terms - neg_terms != 1:
            return False
    k = len(carriers)
    space = (bound + 1) ** k
    if space > search_budget:
        raise ResourceBudgetExceeded(
            f"cycle enumeration space {space} exceeds budget {search_budget}", count=space
        )
    for coeffs in product(range(bound + 1), repeat=k):
        if not any(coeffs):
            continue
        c = Chain(dim, dict(zip(carriers, coeffs)))
        if is_cycle(c):
            return False
    return True


def bounded_cycle_search(
    x: DirectedComplex,
    dim: int,
    bound: int,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> list[Chain]:
    """All nonzero natural cycles of a dimension with coefficients <= bound.

    Exposed for odd dimensions >= 3 where no generating theory is available;
    the enumeration engine is shared with ``even_cycles_trivial``.
    """
    carriers = x.simplices(dim)
    k = len(carriers)
    space = (bound + 1) ** k
    if space > search_budget:
        raise ResourceBudgetExceeded(
            f"cycle enumeration space {space} exceeds budget {search_budget}", count=space
        )
    found = []
    for coeffs in product(range(bound + 1), repeat=k):
        if not any(coeffs):
            continue
        c = Chain(dim, dict(zip(carriers, coeffs)))
        if is_cycle(c):
            found.append(c)
    return found


def is_acyclic_full_simplex(m: int, bound: int = 1) -> bool:
    """Check acyclicity of the complex of one m-simplex and all its faces.

    Degree 0 must have rank one; every circuit of the 1-skeleton must be
    homologous to the zero cycle within ``bound``; even degrees must carry
    no cycles; for m >= 3 the top odd degree is swept by bounded enumeration.
    """
    if not 1 <= m <= 4:
        raise ValueError("desk scale only: 1 <= m <= 4")
    x = close({tuple(range(m + 1))})
    if h0_rank(x) != 1:
        return False
    zero = Chain.zero(1)
    for circuit in z1_generators(x):
        if is_homologous(x, circuit, zero, bound) is None:
            return False
    if x.simplices(2) and not even_cycles_trivial(x, 2, bound):
        return False
    if m >= 3 and bounded_cycle_search(x, 3, bound):
        return False
    return True
