"""Chains and the paired differentials.

A chain is a finite formal sum of equal-dimension simplices.  Coefficients
are either naturals (``int >= 0``) or exact rationals (``Fraction``); the two
instantiations share one sparse representation.  The differential comes in a
positive and a negative part: the positive part deletes the even positions of
a tuple, the negative part the odd positions.  Over the rationals their
difference is the classical signed boundary; over the naturals a chain is a
cycle when the two parts agree on the nose.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .coeff import Coefficient
from .complexes import DirectedComplex, Simplex, simplex_dim, validate_simplex


class Chain:
    """Sparse formal sum of simplices of one dimension.

    Zero coefficients are never stored.  The dimension is carried explicitly
    so that the zero chain of each dimension is well defined.

    >>> c = Chain(1, {(0, 1): 1, (1, 2): 1})
    >>> boundary_pos(c)
    Chain(0, {(1,): 1, (2,): 1})
    """

    __slots__ = ("dimension", "terms")

    def __init__(self, dimension: int, terms: Mapping[Simplex, Coefficient] | None = None):
        if dimension < 0:
            raise ValueError("chain dimension must be >= 0")
        self.dimension = dimension
        clean: dict[Simplex, Coefficient] = {}
        for s, c in (terms or {}).items():
            validate_simplex(s)
            if simplex_dim(s) != dimension:
                raise ValueError(f"simplex {s!r} does not have dimension {dimension}")
            if c != 0:
                clean[s] = c
        self.terms = clean

    @classmethod
    def elementary(cls, s: Simplex, coefficient: Coefficient = 1) -> "Chain":
        return cls(simplex_dim(s), {s: coefficient})

    @classmethod
    def zero(cls, dimension: int) -> "Chain":
        return cls(dimension)

    def is_zero(self) -> bool:
        return not self.terms

    def is_natural(self) -> bool:
        """True when every coefficient is a non-negative integer."""
        return all(
            (isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)) and c >= 0
            for c in self.terms.values()
        )

    def __add__(self, other: "Chain") -> "Chain":
        if self.dimension != other.dimension:
            raise ValueError("cannot add chains of different dimensions")
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return Chain(self.dimension, terms)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-1) * other

    def __rmul__(self, scalar: Coefficient) -> "Chain":
        return Chain(self.dimension, {s: scalar * c for s, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.dimension, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        ordered = {s: self.terms[s] for s in sorted(self.terms)}
        return f"Chain({self.dimension}, {ordered})"

    def coefficient_sum(self) -> Coefficient:
        return sum(self.terms.values())


def _partial(c: Chain, parity: int) -> Chain:
    # parity 0 deletes even positions, parity 1 odd positions
    if c.dimension == 0:
        return Chain(0)  # the differentials of 0-chains are the trivial maps
    out: dict[Simplex, Coefficient] = {}
    for s, coeff in c.terms.items():
        for i in range(parity, len(s), 2):
            face = s[:i] + s[i + 1 :]
            out[face] = out.get(face, 0) + coeff
    return Chain(c.dimension - 1, out)


def boundary_pos(c: Chain) -> Chain:
    """Positive differential: delete the vertices at even positions."""
    return _partial(c, 0)


def boundary_neg(c: Chain) -> Chain:
    """Negative differential: delete the vertices at odd positions."""
    return _partial(c, 1)


def signed_boundary(c: Chain) -> Chain:
    """Classical boundary ``boundary_pos - boundary_neg`` (rational chains)."""
    return boundary_pos(c) - boundary_neg(c)


def is_cycle(c: Chain) -> bool:
    """A chain is a cycle when its positive and negative boundaries agree.

    Over the naturals that is strictly stronger than having zero signed
    boundary; it is what forces cycles to follow the arrow directions.
    """
    return boundary_pos(c) == boundary_neg(c)


def signed_face_coefficients(s: Simplex) -> dict[Simplex, Fraction]:
    """Signed boundary of an elementary chain, as face -> coefficient.

    Coinciding faces of a degenerate tuple are combined, so e.g. a loop
    ``(v, v)`` has an empty signed boundary.
    """
    out: dict[Simplex, Fraction] = {}
    for i in range(len(s)):
        face = s[:i] + s[i + 1 :]
        sign = Fraction(1) if i % 2 == 0 else Fraction(-1)
        out[face] = out.get(face, Fraction(0)) + sign
    return {f: c for f, c in out.items() if c != 0}


def verify_chain_complex(x: DirectedComplex, max_dim: int) -> bool:
    """Check the semimodule chain-complex identity
    ``d+d+ + d-d- == d+d- + d-d+`` on every elementary chain up to ``max_dim``.
    """
    for dim in range(2, max_dim + 1):
        for s in x.simplices(dim):
            e = Chain.elementary(s)
            dp, dn = boundary_pos(e), boundary_neg(e)
            lhs = boundary_pos(dp) + boundary_neg(dn)
            rhs = boundary_pos(dn) + boundary_neg(dp)
            if lhs != rhs:
                return False
    return True


def chain_from_simplices(simplices: Iterable[Simplex]) -> Chain:
    """Natural 0/1-style chain summing the given simplices (with multiplicity)."""
    simplices = list(simplices)
    if not simplices:
        raise ValueError("cannot infer the dimension of an empty sum")
    dim = simplex_dim(simplices[0])
    terms: dict[Simplex, Coefficient] = {}
    for s in simplices:
        terms[s] = terms.get(s, 0) + 1
    return Chain(dim, terms)
