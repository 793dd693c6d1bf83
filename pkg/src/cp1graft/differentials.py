"""The quadratic differentials q_theta with double poles at 0, 1 and infinity.

    q(z) = (1 - t1^2) / (2 z^2) + (1 - t2^2) / (2 (z-1)^2)
           + (t1^2 + t2^2 - t3^2 - 1) / (2 z (z-1))

has leading coefficient (1 - t^2)/2 at each of the three punctures.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from . import tolerance
from .errors import IntegerExponent, PoleEvaluation

__all__ = [
    "DifferentialParams",
    "HolonomyType",
    "evaluate_q",
    "leading_coefficient",
    "laurent_coefficient",
    "indicial_roots",
    "holonomy_type",
    "index_exponent",
    "exponent_from_index",
    "params_from_indices",
]

PUNCTURES = (0, 1, math.inf)


@dataclass(frozen=True)
class DifferentialParams:
    theta: tuple

    def __post_init__(self):
        t = tuple(complex(x) if isinstance(x, complex) else x for x in self.theta)
        if len(t) != 3:
            raise ValueError("three exponents are required")
        object.__setattr__(self, "theta", t)

    def coefficients(self):
        """Numerators (c0, c1, cm) of the three partial fractions."""
        t1, t2, t3 = (complex(x) ** 2 for x in self.theta)
        return (1 - t1) / 2, (1 - t2) / 2, (t1 + t2 - t3 - 1) / 2

    def is_zero(self, eps=None):
        eps = tolerance.resolve(eps)
        return all(abs(c) < eps for c in self.coefficients())

    def q(self, z):
        """Vectorized evaluation without pole checks."""
        c0, c1, cm = self.coefficients()
        return c0 / z**2 + c1 / (z - 1) ** 2 + cm / (z * (z - 1))


def evaluate_q(p, z, eps=None):
    eps = tolerance.resolve(eps)
    z = complex(z)
    if abs(z) < eps or abs(z - 1) < eps:
        raise PoleEvaluation(f"q has a pole at {z}")
    return complex(p.q(z))


def laurent_coefficient(p, puncture, radius=None, samples=1024):
    """Coefficient of the double pole, by a trapezoid-rule contour integral.

    At infinity the differential is pulled back to ``w = 1/z`` where it reads
    ``q(1/w) / w^4``.
    """
    t = 2 * np.pi * np.arange(samples) / samples
    if puncture == math.inf or puncture is None:
        r = 0.1 if radius is None else radius
        w = r * np.exp(1j * t)
        vals = p.q(1 / w) / w**4 * w**2
    else:
        r = 0.25 if radius is None else radius
        s = r * np.exp(1j * t)
        vals = p.q(puncture + s) * s**2
    return complex(np.mean(vals))


def leading_coefficient(p, puncture):
    """(1 - theta^2)/2 for the exponent at ``puncture`` (0, 1 or inf)."""
    idx = {0: 0, 1: 1}.get(puncture, 2) if puncture != math.inf else 2
    t = complex(p.theta[idx])
    return (1 - t * t) / 2


def indicial_roots(a):
    """Roots of r(r-1) + a/2 = 0, larger real part first."""
    a = complex(a)
    s = cmath.sqrt(1 - 2 * a)
    r1, r2 = (1 + s) / 2, (1 - s) / 2
    return (r1, r2) if (r1.real, r1.imag) >= (r2.real, r2.imag) else (r2, r1)


class HolonomyType(enum.Enum):
    PARABOLIC = "parabolic"
    TRIVIAL_OR_PARABOLIC = "trivial_or_parabolic"
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    PURELY_LOXODROMIC = "purely_loxodromic"


def holonomy_type(theta, eps=None):
    """Type of the local holonomy at a puncture with reduced exponent ``theta``."""
    eps = tolerance.resolve(eps)
    t = complex(theta)
    real = abs(t.imag) < eps
    int_re = abs(t.real - round(t.real)) < eps
    if real and abs(t.real) < eps:
        return HolonomyType.PARABOLIC
    if real and int_re:
        return HolonomyType.TRIVIAL_OR_PARABOLIC
    if real:
        return HolonomyType.ELLIPTIC
    if int_re:
        return HolonomyType.HYPERBOLIC
    return HolonomyType.PURELY_LOXODROMIC


def _check_non_integer(x, eps, exc):
    if abs(x - round(x)) < eps:
        raise exc(f"{x} is an integer")


def index_exponent(theta, eps=None):
    """Index 2 pi |theta| of a puncture with real non-integer exponent."""
    eps = tolerance.resolve(eps)
    theta = float(theta)
    _check_non_integer(theta, eps, IntegerExponent)
    return 2 * math.pi * abs(theta)


def exponent_from_index(index, eps=None):
    """Non-negative exponent I / 2pi."""
    eps = tolerance.resolve(eps)
    theta = float(index) / (2 * math.pi)
    _check_non_integer(theta, eps, IntegerExponent)
    return theta


def params_from_indices(indices):
    """Exponents theta_i = I_i / 2pi of the differential with the given indices.

    Exact index triples give exact :class:`fractions.Fraction` exponents.
    """
    from .grafting import IndexTriple

    if not isinstance(indices, IndexTriple):
        indices = IndexTriple(indices)
    return DifferentialParams(indices.thetas())
