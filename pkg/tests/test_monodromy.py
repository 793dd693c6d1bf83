import math

import numpy as np
import pytest

from cp1graft.angles import Angle
from cp1graft.differentials import DifferentialParams
from cp1graft.errors import InvalidInput
from cp1graft.monodromy import (
    Arc,
    LoopPath,
    Segment,
    cross_check_atomic,
    integrate_monodromy,
    loop_around,
    peripheral_traces,
    predicted_tr2,
    standard_loops,
)
from cp1graft.triangles import atomic_classify, realize

P = Angle.pi


def test_zero_differential_has_trivial_monodromy():
    p = DifferentialParams((1, 1, 1))
    for loop in standard_loops():
        assert np.allclose(integrate_monodromy(p, loop), np.eye(2), atol=1e-10)


@pytest.mark.parametrize("theta,tr2", [(0.5, 0.0), (1 / 3, 1.0), (0.25, 2.0), (1.5, 0.0)])
def test_local_trace_examples(theta, tr2):
    assert predicted_tr2(theta).real == pytest.approx(tr2, abs=1e-12)
    m = integrate_monodromy(DifferentialParams((theta, 0.5, 0.5)), loop_around(0))
    assert abs(np.trace(m) ** 2 - tr2) < 1e-9


def test_monodromy_is_unimodular():
    p = DifferentialParams((0.3, 0.7, 1.2))
    for loop in standard_loops():
        assert abs(np.linalg.det(integrate_monodromy(p, loop)) - 1) < 1e-9


def test_homotopy_invariance():
    p = DifferentialParams((0.3, 0.45, 1.3))
    for puncture in (0, 1):
        a = integrate_monodromy(p, loop_around(puncture, radius=0.1))
        b = integrate_monodromy(p, loop_around(puncture, radius=0.3))
        assert np.abs(a - b).max() < 1e-8


def test_reversed_loop_gives_inverse():
    p = DifferentialParams((0.3, 0.45, 1.3))
    loop = loop_around(0)
    m = integrate_monodromy(p, loop)
    mr = integrate_monodromy(p, loop.reversed())
    assert np.allclose(m @ mr, np.eye(2), atol=1e-9)


def test_concatenation_order():
    p = DifferentialParams((0.3, 0.45, 1.3))
    a, b, _ = standard_loops()
    ab = integrate_monodromy(p, a * b)
    assert np.allclose(ab, integrate_monodromy(p, b) @ integrate_monodromy(p, a), atol=1e-9)


def test_clearance_and_join_validation():
    with pytest.raises(InvalidInput):
        loop_around(0, radius=0.01)
    with pytest.raises(InvalidInput):
        LoopPath((Segment(0.5, 0.6), Segment(0.7, 0.5)), {})
    with pytest.raises(InvalidInput):
        loop_around(math.inf)
    with pytest.raises(InvalidInput):
        integrate_monodromy((0.5, 0.5, 0.5), loop_around(0), tol=0)


@pytest.mark.parametrize("theta", [(0.5, 0.5, 0.5), (1 / 3, 1 / 4, 1 / 5), (2.7, 2.3, 0.9), (0.2, 1.6, 2.45)])
def test_peripheral_traces(theta):
    r = peripheral_traces(theta)
    assert max(r.tr2_residuals) < 1e-8
    assert r.product_residual < 1e-8
    assert r.wronskian_drift < 1e-8
    assert r.det_residual < 1e-9
    # a large circle around both finite punctures sees the puncture at infinity
    assert abs(r.secondary_tr2_inf - r.predicted[2]) < 1e-8


def test_big_circle_loop_matches_standard_gamma():
    p = DifferentialParams((0.3, 0.45, 1.3))
    big = LoopPath((Arc(0j, 10.0, 0.0, 2 * math.pi),), {0: 1, 1: 1})
    tr2 = np.trace(integrate_monodromy(p, big)) ** 2
    assert abs(tr2 - predicted_tr2(1.3)) < 1e-8


@pytest.mark.parametrize("angles", [
    (P(1, 2), P(1, 2), P(1, 2)),
    (P(1, 6), P(1, 3), P(1, 2)),
    (P(3, 2), P(1, 2), P(1, 2)),
    (P(1, 4), P(1, 3), P(1, 6)),
])
def test_cross_check_atomic(angles):
    report = cross_check_atomic(realize(atomic_classify(*angles)))
    assert report.max_residual < 1e-8
    assert report.monodromy.product_residual < 1e-8


def test_traces_over_wide_exponent_range(rng):
    # Large exponents make solutions grow by ~e^8 along the loops, so the
    # determinant only keeps ~1e-7; traces stay far inside 1e-5.
    worst_tr2 = worst_prod = 0.0
    for _ in range(12):
        theta = rng.uniform(0.05, 4.95, size=3)
        if min(abs(x - round(x)) for x in theta) < 0.05:
            continue
        r = peripheral_traces(tuple(theta), secondary=False)
        worst_tr2 = max(worst_tr2, max(r.tr2_residuals))
        worst_prod = max(worst_prod, r.product_residual)
        assert r.wronskian_drift < 1e-5
    assert worst_tr2 < 1e-5 and worst_prod < 1e-5
