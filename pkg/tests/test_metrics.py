import random
from fractions import Fraction

import pytest

from dirph.diagram import PersistenceDiagram
from dirph.errors import ResourceBudgetExceeded
from dirph.metrics import (
    MapPair,
    bottleneck,
    codistortion,
    correspondence_distortion,
    distortion,
    map_distortion,
    stability_check,
)
from dirph.rips import DissimilarityMatrix
from oracles import brute_bottleneck


def dgm(points, dim=1):
    return PersistenceDiagram(dim, points)


def test_bottleneck_identity_is_zero():
    a = dgm({(Fraction(0), Fraction(2)): 2, (Fraction(1), None): 1})
    assert bottleneck(a, a) == 0


def test_bottleneck_single_point_to_diagonal():
    assert bottleneck(dgm({(Fraction(0), Fraction(2)): 1}), dgm({})) == 1


def test_bottleneck_forced_immortal_matching():
    a = dgm({(Fraction(1), None): 1})
    b = dgm({(Fraction(2), None): 1})
    assert bottleneck(a, b) == 1


def test_bottleneck_infinite_when_immortal_counts_differ():
    a = dgm({(Fraction(1), None): 1})
    assert bottleneck(a, dgm({})) is None


def test_bottleneck_dimension_mismatch():
    with pytest.raises(ValueError):
        bottleneck(dgm({}, dim=0), dgm({}, dim=1))


def _random_diagram(rng, max_points=5):
    points = []
    for _ in range(rng.randint(0, max_points)):
        birth = Fraction(rng.randint(0, 8), rng.choice([1, 2]))
        if rng.random() < 0.25:
            points.append((birth, None))
        else:
            points.append((birth, birth + Fraction(rng.randint(1, 6), rng.choice([1, 2]))))
    return dgm(points)


def test_bottleneck_matches_exhaustive_oracle():
    rng = random.Random(51)
    for _ in range(80):
        a, b = _random_diagram(rng), _random_diagram(rng)
        assert bottleneck(a, b) == brute_bottleneck(a, b)


def test_bottleneck_pseudometric_axioms():
    rng = random.Random(52)
    for _ in range(25):
        a, b, c = (_random_diagram(rng, 4) for _ in range(3))
        dab, dba = bottleneck(a, b), bottleneck(b, a)
        assert dab == dba
        dac, dcb = bottleneck(a, c), bottleneck(c, b)
        if dab is not None and dac is not None and dcb is not None:
            assert dab <= dac + dcb
        assert bottleneck(a, a) == 0


def test_distortion_examples():
    dv = DissimilarityMatrix.from_rows([[0, 1], [2, 0]])
    same = distortion([(0, 0), (1, 1)], dv, dv)
    assert same == 0
    bumped = DissimilarityMatrix.from_rows([[0, 1], [2, Fraction(1, 5)]])
    assert distortion([(0, 0), (1, 1)], dv, bumped) == Fraction(1, 5)
    assert distortion([(0, 1)], dv, bumped) == abs(dv[0, 0] - bumped[1, 1])
    with pytest.raises(ValueError):
        distortion([], dv, dv)


def test_codistortion_asymmetric_for_constant_maps():
    dv = DissimilarityMatrix.from_rows([[0, 3], [0, 0]])
    dw = DissimilarityMatrix.from_rows([[0]])
    pair = MapPair(phi=(0, 0), psi=(0,))
    forward, backward = codistortion(pair, dv, dw)
    assert forward == 0  # max over |d_V(v, 0) - d_W(0, w)|
    assert backward == 3  # picks up the asymmetric entry d_V(0, 1)


def test_codistortion_identity_zero():
    dv = DissimilarityMatrix.from_rows([[0, 1], [2, 0]])
    assert codistortion(MapPair((0, 1), (0, 1)), dv, dv) == (0, 0)


def test_correspondence_distortion_same_matrix_is_zero():
    dv = DissimilarityMatrix.from_rows([[0, 1, 4], [2, 0, 1], [1, 3, 0]])
    assert correspondence_distortion(dv, dv) == 0


def test_correspondence_distortion_one_point():
    a = DissimilarityMatrix.from_rows([[3]])
    b = DissimilarityMatrix.from_rows([[7]])
    assert correspondence_distortion(a, b) == 2


def test_correspondence_distortion_symmetry_and_relabeling():
    rng = random.Random(53)
    for _ in range(5):
        rows = [[Fraction(rng.randint(0, 4)) for _ in range(3)] for _ in range(3)]
        dv = DissimilarityMatrix.from_rows(rows)
        permutation = [2, 0, 1]
        relabeled = DissimilarityMatrix.from_rows(
            [[rows[permutation[i]][permutation[j]] for j in range(3)] for i in range(3)]
        )
        assert correspondence_distortion(dv, relabeled) == 0
        other = DissimilarityMatrix.from_rows(
            [[Fraction(rng.randint(0, 4)) for _ in range(2)] for _ in range(2)]
        )
        assert correspondence_distortion(dv, other) == correspondence_distortion(other, dv)


def test_correspondence_distortion_shift_bounded_by_half_epsilon():
    rng = random.Random(54)
    rows = [[Fraction(rng.randint(0, 4)) for _ in range(3)] for _ in range(3)]
    dv = DissimilarityMatrix.from_rows(rows)
    eps = Fraction(1, 3)
    shifted = DissimilarityMatrix.from_rows([[x + eps for x in row] for row in rows])
    value = correspondence_distortion(dv, shifted)
    identity = MapPair((0, 1, 2), (0, 1, 2))
    upper = max(
        map_distortion(identity.phi, dv, shifted),
        map_distortion(identity.psi, shifted, dv),
        *codistortion(identity, dv, shifted),
    )
    assert value <= upper / 2 <= eps / 2


def test_correspondence_budget():
    big = DissimilarityMatrix.from_rows([[0] * 6 for _ in range(6)])
    with pytest.raises(ResourceBudgetExceeded):
        correspondence_distortion(big, big, pair_budget=100)


def test_stability_identical_inputs():
    dv = DissimilarityMatrix.from_rows([[0, 1], [2, 0]])
    report = stability_check(dv, dv, k=1)
    assert report.cd == 0
    assert all(d == 0 for d in report.bottlenecks.values())
    assert report.ok


def test_stability_cyclic_triangle_edge_reweighted():
    # one directed-triangle edge weight moved by 1: both sides computed in
    # full, with the correspondence distortion brute-forced
    far = 10
    base = DissimilarityMatrix.from_rows(
        [[0, 1, far], [far, 0, 1], [1, far, 0]]
    )
    reweighted = DissimilarityMatrix.from_rows(
        [[0, 2, far], [far, 0, 1], [1, far, 0]]
    )
    report = stability_check(base, reweighted, k=1)
    assert report.cd <= Fraction(1, 2)
    assert report.ok


def test_stability_perturbation_within_bound():
    rng = random.Random(55)
    for _ in range(5):
        rows = [[Fraction(rng.randint(0, 4)) for _ in range(3)] for _ in range(3)]
        eps = Fraction(1, 2)
        noisy = [
            [x + Fraction(rng.randint(-2, 2), 4) for x in row] for row in rows
        ]
        dv = DissimilarityMatrix.from_rows(rows)
        dw = DissimilarityMatrix.from_rows(noisy)
        report = stability_check(dv, dw, k=1, cd_upper_bound=eps / 2)
        assert report.ok
        for distance in report.bottlenecks.values():
            assert distance is not None and distance <= eps
