import math
from fractions import Fraction

import numpy as np
import pytest

from cp1graft.angles import Angle
from cp1graft.differentials import (
    DifferentialParams,
    HolonomyType,
    evaluate_q,
    exponent_from_index,
    holonomy_type,
    index_exponent,
    indicial_roots,
    laurent_coefficient,
    leading_coefficient,
    params_from_indices,
)
from cp1graft.errors import IntegerExponent, InvalidIndices, PoleEvaluation
from cp1graft.grafting import IndexTriple

PUNCTURES = (0, 1, math.inf)


def test_zero_differential():
    p = DifferentialParams((1, 1, 1))
    assert p.is_zero()
    for z in (2, 0.3 + 1j, -5):
        assert evaluate_q(p, z) == 0
    assert not DifferentialParams((1, 1, 0.5)).is_zero()
    assert DifferentialParams((-1, 1, -1)).is_zero()


def test_half_exponents_at_two():
    # 3/8 / 4 + 3/8 / 1 + (-3/8) / (2 * 1) = 3/32 + 12/32 - 6/32
    p = DifferentialParams((0.5, 0.5, 0.5))
    assert evaluate_q(p, 2) == pytest.approx(9 / 32, abs=1e-15)


def test_pole_evaluation():
    p = DifferentialParams((0.5, 0.5, 0.5))
    with pytest.raises(PoleEvaluation):
        evaluate_q(p, 0)
    with pytest.raises(PoleEvaluation):
        evaluate_q(p, 1)


def test_near_zero_behaviour():
    p = DifferentialParams((0.3, 0.7, 1.9))
    z = 1e-6
    assert z * z * evaluate_q(p, z) == pytest.approx((1 - 0.09) / 2, rel=1e-5)


def test_leading_coefficient_examples():
    p = DifferentialParams((0.5, 0.2, 0.9))
    assert leading_coefficient(p, 0) == pytest.approx(3 / 8)
    assert leading_coefficient(p, math.inf) == pytest.approx((1 - 0.81) / 2)
    q = DifferentialParams((1, 1, 1))
    assert all(leading_coefficient(q, x) == 0 for x in PUNCTURES)


def test_laurent_oracle(rng):
    for _ in range(100):
        theta = rng.uniform(-4, 4, size=3)
        p = DifferentialParams(tuple(theta))
        for x, t in zip(PUNCTURES, theta):
            assert abs(laurent_coefficient(p, x) - (1 - t * t) / 2) < 1e-6


def test_laurent_at_infinity_radius_independent():
    p = DifferentialParams((0.3, 1.4, 2.2))
    a = laurent_coefficient(p, math.inf, radius=0.1)
    b = laurent_coefficient(p, math.inf, radius=0.3)
    assert abs(a - b) < 1e-10
    assert abs(a - (1 - 2.2 ** 2) / 2) < 1e-10


def test_complex_exponents():
    p = DifferentialParams((0.5 + 0.2j, 1 + 0.5j, 0.1j))
    for x, t in zip(PUNCTURES, p.theta):
        assert abs(laurent_coefficient(p, x) - (1 - complex(t) ** 2) / 2) < 1e-9


@pytest.mark.parametrize("a,roots", [
    (0, (1, 0)),
    (3 / 8, (0.75, 0.25)),
    (0.5, (0.5, 0.5)),
])
def test_indicial_roots_examples(a, roots):
    r1, r2 = indicial_roots(a)
    assert (r1, r2) == pytest.approx(roots)


def test_indicial_roots_recover_theta(rng):
    for _ in range(200):
        theta = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
        r1, r2 = indicial_roots((1 - theta * theta) / 2)
        assert abs(r1 + r2 - 1) < 1e-12
        assert min(abs(r1 - r2 - theta), abs(r1 - r2 + theta)) < 1e-10
        for r in (r1, r2):
            assert abs(r * (r - 1) + (1 - theta * theta) / 4) < 1e-10


@pytest.mark.parametrize("theta,tag", [
    (0.3, HolonomyType.ELLIPTIC),
    (2, HolonomyType.TRIVIAL_OR_PARABOLIC),
    (-1, HolonomyType.TRIVIAL_OR_PARABOLIC),
    (0, HolonomyType.PARABOLIC),
    (1 + 0.5j, HolonomyType.HYPERBOLIC),
    (0.5j, HolonomyType.HYPERBOLIC),
    (0.3 + 0.5j, HolonomyType.PURELY_LOXODROMIC),
])
def test_holonomy_type(theta, tag):
    assert holonomy_type(theta) is tag


def test_holonomy_type_partition():
    grid = [x + 1j * y for x in np.linspace(-2, 2, 41) for y in (-1, -1e-12, 0, 1e-12, 0.5)]
    grid += [1 + 1e-8, 1 - 1e-8, 1e-8]
    for t in grid:
        assert isinstance(holonomy_type(t), HolonomyType)


def test_index_exponent_examples():
    assert index_exponent(0.3) == pytest.approx(0.6 * math.pi)
    assert index_exponent(-0.3) == pytest.approx(0.6 * math.pi)
    assert exponent_from_index(3 * math.pi) == pytest.approx(1.5)
    with pytest.raises(IntegerExponent):
        index_exponent(2)
    with pytest.raises(IntegerExponent):
        exponent_from_index(4 * math.pi)


def test_params_from_indices():
    p = params_from_indices(IndexTriple(tuple(Angle.pi(1) for _ in range(3))))
    assert p.theta == (Fraction(1, 2),) * 3
    p = params_from_indices(IndexTriple((Angle.pi(3), Angle.pi(1), Angle.pi(1, 2))))
    assert p.theta == (Fraction(3, 2), Fraction(1, 2), Fraction(1, 4))
    for t, i in zip(p.theta, (3, 1, Fraction(1, 2))):
        assert index_exponent(t) == pytest.approx(float(i) * math.pi)
    with pytest.raises(InvalidIndices):
        params_from_indices((Angle.pi(2), Angle.pi(1), Angle.pi(1)))


def test_params_need_three():
    with pytest.raises(ValueError):
        DifferentialParams((0.5, 0.5))
