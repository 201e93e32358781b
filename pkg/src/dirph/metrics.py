"""Bottleneck distance, correspondence distortion, and the stability harness.

All distances are computed exactly over the rationals.  The bottleneck
distance between diagrams is the smallest threshold t for which a perfect
matching exists in the usual bipartite graph with diagonal slots; since the
optimum is always one of finitely many candidate costs, we binary-search the
sorted candidate set with an augmenting-path feasibility test instead of
doing floating-point geometry.  Points at infinity must pair with points at
infinity: |inf - inf| = 0 and |finite - inf| = inf.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .diagram import PersistenceDiagram, Point
from .errors import ResourceBudgetExceeded
from .rips import DissimilarityMatrix

DEFAULT_PAIR_BUDGET = 10_000_000


def _linf(a: Point, b: Point) -> Fraction | None:
    """Extended l-infinity cost between diagram points; None is +infinity."""
    (ab, ad), (bb, bd) = a, b
    if (ad is None) != (bd is None):
        return None
    gap = abs(ab - bb)
    if ad is not None and bd is not None:
        gap = max(gap, abs(ad - bd))
    return gap


def _diagonal_cost(p: Point) -> Fraction | None:
    birth, death = p
    if death is None:
        return None
    return (death - birth) / 2


def _feasible(a: list[Point], b: list[Point], t: Fraction) -> bool:
    """Perfect matching test at threshold t in the diagram-matching graph.

    Left side: points of A plus one diagonal slot per point of B; right
    side: points of B plus one diagonal slot per point of A.  A real point
    may use its own diagonal slot at half its persistence; diagonal slots
    match each other for free.
    """
    na, nb = len(a), len(b)
    size = na + nb

    def edges(left: int) -> Iterable[int]:
        if left < na:
            for right in range(nb):
                cost = _linf(a[left], b[right])
                if cost is not None and cost <= t:
                    yield right
            cost = _diagonal_cost(a[left])
            if cost is not None and cost <= t:
                yield nb + left
        else:
            cost = _diagonal_cost(b[left - na])
            if cost is not None and cost <= t:
                yield left - na
            yield from range(nb, nb + na)

    match_right: dict[int, int] = {}

    def augment(left: int, seen: set[int]) -> bool:
        for right in edges(left):
            if right in seen:
                continue
            seen.add(right)
            if right not in match_right or augment(match_right[right], seen):
                match_right[right] = left
                return True
        return False

    matched = 0
    for left in range(size):
        if augment(left, set()):
            matched += 1
    return matched == size


def bottleneck(a: PersistenceDiagram, b: PersistenceDiagram) -> Fraction | None:
    """Exact bottleneck distance; ``None`` encodes +infinity.

    Immortal points can only match each other, so when the two diagrams
    disagree on how many immortal points they carry the distance is
    infinite.  Immortal points are matched by sorted births (optimal for a
    min-max assignment on the line); mortal points go through the candidate
    threshold search.
    """
    if a.dimension != b.dimension:
        raise ValueError("diagrams must share a dimension")
    a_immortal = sorted(p[0] for p in a.expand() if p[1] is None)
    b_immortal = sorted(p[0] for p in b.expand() if p[1] is None)
    if len(a_immortal) != len(b_immortal):
        return None
    immortal_part = Fraction(0)
    for x, y in zip(a_immortal, b_immortal):
        immortal_part = max(immortal_part, abs(x - y))

    a_mortal = [p for p in a.expand() if p[1] is not None]
    b_mortal = [p for p in b.expand() if p[1] is not None]
    candidates = {Fraction(0), immortal_part}
    for p in a_mortal:
        candidates.add(_diagonal_cost(p))
    for q in b_mortal:
        candidates.add(_diagonal_cost(q))
    for p, q in product(a_mortal, b_mortal):
        candidates.add(_linf(p, q))
    thresholds = sorted(c for c in candidates if c is not None and c >= immortal_part)
    lo, hi = 0, len(thresholds) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(a_mortal, b_mortal, thresholds[mid]):
            hi = mid
        else:
            lo = mid + 1
    return thresholds[lo]


@dataclass(frozen=True)
class MapPair:
    """A pair of maps phi: V -> W and psi: W -> V given by index arrays."""

    phi: tuple[int, ...]
    psi: tuple[int, ...]


def distortion(
    relation: Iterable[tuple[int, int]],
    dv: DissimilarityMatrix,
    dw: DissimilarityMatrix,
) -> Fraction:
    """Distortion of a relation: max |d_V(v1, v2) - d_W(w1, w2)| over pairs
    of related pairs."""
    pairs = list(relation)
    if not pairs:
        raise ValueError("the relation must be non-empty")
    return max(
        abs(dv[v1, v2] - dw[w1, w2]) for (v1, w1) in pairs for (v2, w2) in pairs
    )


def map_distortion(phi: Sequence[int], dv: DissimilarityMatrix, dw: DissimilarityMatrix) -> Fraction:
    n = dv.n
    return max(abs(dv[i, j] - dw[phi[i], phi[j]]) for i in range(n) for j in range(n))


def codistortion(
    pair: MapPair, dv: DissimilarityMatrix, dw: DissimilarityMatrix
) -> tuple[Fraction, Fraction]:
    """Both codistortions of (phi, psi): max |d_V(v, psi(w)) - d_W(phi(v), w)|
    and the same with the roles swapped.  They differ in general."""
    phi, psi = pair.phi, pair.psi
    forward = max(
        abs(dv[v, psi[w]] - dw[phi[v], w]) for v in range(dv.n) for w in range(dw.n)
    )
    backward = max(
        abs(dw[w, phi[v]] - dv[psi[w], v]) for v in range(dv.n) for w in range(dw.n)
    )
    return forward, backward


def correspondence_distortion(
    dv: DissimilarityMatrix,
    dw: DissimilarityMatrix,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> Fraction:
    """Correspondence distortion distance, by brute force over map pairs:

        1/2 * min over (phi, psi) of
        max(dis(phi), dis(psi), codis(phi, psi), codis(psi, phi)).

    Enumerating map pairs costs |W|^|V| * |V|^|W|; both factors are pruned
    by sorting maps by their own distortion and abandoning a branch as soon
    as it cannot beat the best max found so far.
    """
    nv, nw = dv.n, dw.n
    total = (nw**nv) * (nv**nw)
    if total > pair_budget:
        raise ResourceBudgetExceeded(
            f"{total} map pairs exceed the budget of {pair_budget}", count=total
        )
    phis = sorted(
        ((map_distortion(p, dv, dw), tuple(p)) for p in product(range(nw), repeat=nv))
    )
    psis = sorted(
        ((map_distortion(p, dw, dv), tuple(p)) for p in product(range(nv), repeat=nw))
    )
    best: Fraction | None = None
    for dis_phi, phi in phis:
        if best is not None and dis_phi >= best:
            break
        for dis_psi, psi in psis:
            if best is not None and dis_psi >= best:
                break
            forward, backward = codistortion(MapPair(phi, psi), dv, dw)
            value = max(dis_phi, dis_psi, forward, backward)
            if best is None or value < best:
                best = value
    assert best is not None
    return best / 2


@dataclass
class StabilityReport:
    """All quantities of one stability comparison.

    ``bottlenecks`` maps (dimension, kind) to the bottleneck distance; the
    bound is ``2 * cd`` where ``cd`` is the correspondence distortion
    distance (or a caller-supplied upper bound for it).
    """

    cd: Fraction
    cd_is_upper_bound: bool
    bottlenecks: dict[tuple[int, str], Fraction | None] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        bound = 2 * self.cd
        return all(d is not None and d <= bound for d in self.bottlenecks.values())

    def violations(self) -> list[tuple[int, str]]:
        bound = 2 * self.cd
        return [k for k, d in self.bottlenecks.items() if d is None or d > bound]


def stability_check(
    dv: DissimilarityMatrix,
    dw: DissimilarityMatrix,
    k: int = 1,
    cd_upper_bound: Fraction | None = None,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> StabilityReport:
    """Compare the persistence output of two dissimilarity matrices.

    Computes undirected diagrams for dimensions 0..k and the directed
    diagram in dimension 1, then checks every bottleneck distance against
    twice the correspondence distortion distance (brute-forced unless an
    upper bound is supplied).
    """
    from .pipeline import compute_diagrams  # local import to avoid a cycle

    cd = cd_upper_bound if cd_upper_bound is not None else correspondence_distortion(
        dv, dw, pair_budget
    )
    report = StabilityReport(cd=cd, cd_is_upper_bound=cd_upper_bound is not None)
    left = compute_diagrams(dv, max_dim=k, directed=True)
    right = compute_diagrams(dw, max_dim=k, directed=True)
    for key in left.undirected:
        report.bottlenecks[(key, "undirected")] = bottleneck(
            left.undirected[key], right.undirected[key]
        )
    if 1 in left.directed and 1 in right.directed:
        report.bottlenecks[(1, "directed")] = bottleneck(
            left.directed[1], right.directed[1]
        )
    return report
