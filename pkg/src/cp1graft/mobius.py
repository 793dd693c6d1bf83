"""Points of the Riemann sphere and Möbius transformations.

Points are stored as homogeneous lifts ``(z1, z2)``; maps are 2x2 complex
matrices with determinant one, compared up to the sign of the lift.
Geometric angles produced here are plain floats in radians.
"""

from __future__ import annotations

import cmath
import enum
import math

import numpy as np

from . import tolerance
from .errors import CoincidentPoints, IdentityInput, NotElliptic, NotFixedPoint, SingularMatrix

__all__ = [
    "RiemannPoint",
    "MobiusMap",
    "MapClass",
    "INF",
    "classify",
    "fixed_points",
    "rotation_angle",
    "rotation_invariant",
    "normalize_triple",
    "apply",
]

TWO_PI = 2.0 * math.pi


class RiemannPoint:
    """A point of CP^1 given by a lift with the larger coordinate scaled to 1."""

    __slots__ = ("z1", "z2")

    def __init__(self, z1, z2=1.0):
        z1, z2 = complex(z1), complex(z2)
        if not (cmath.isfinite(z1) and cmath.isfinite(z2)):
            raise ValueError("lift coordinates must be finite")
        if abs(z1) == 0.0 and abs(z2) == 0.0:
            raise ValueError("the zero vector is not a point of CP^1")
        s = z1 if abs(z1) > abs(z2) else z2
        self.z1 = z1 / s
        self.z2 = z2 / s

    @classmethod
    def from_complex(cls, z):
        """Affine coordinate to point; ``None`` or an infinite value means infinity."""
        if z is None:
            return INF
        z = complex(z)
        if cmath.isinf(z):
            return INF
        return cls(z, 1.0)

    @classmethod
    def coerce(cls, p):
        if isinstance(p, RiemannPoint):
            return p
        return cls.from_complex(p)

    @property
    def lift(self):
        return np.array([self.z1, self.z2], dtype=complex)

    def is_infinity(self, eps=None):
        return abs(self.z2) <= tolerance.resolve(eps)

    def to_complex(self):
        """Affine coordinate; ``complex('inf')`` for the point at infinity."""
        if self.z2 == 0:
            return complex(math.inf, 0.0)
        return self.z1 / self.z2

    def distance(self, other):
        """Chordal-type distance |z1 w2 - z2 w1| between normalized lifts."""
        other = RiemannPoint.coerce(other)
        n = math.hypot(abs(self.z1), abs(self.z2)) * math.hypot(abs(other.z1), abs(other.z2))
        return abs(self.z1 * other.z2 - self.z2 * other.z1) / n

    def isclose(self, other, eps=None):
        return self.distance(other) < tolerance.resolve(eps)

    def __eq__(self, other):
        if not isinstance(other, RiemannPoint):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def __repr__(self):
        if self.z2 == 0:
            return "RiemannPoint(inf)"
        return f"RiemannPoint({self.to_complex()!r})"


INF = RiemannPoint(1.0, 0.0)


class MapClass(enum.Enum):
    IDENTITY = "identity"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    LOXODROMIC = "loxodromic"


class MobiusMap:
    """Projective class of an invertible 2x2 complex matrix, stored in SL2."""

    __slots__ = ("matrix",)

    def __init__(self, matrix, eps=None):
        m = np.array(matrix, dtype=complex).reshape(2, 2)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        scale = float(np.max(np.abs(m))) if m.size else 0.0
        if scale == 0.0 or abs(det) <= tolerance.resolve(eps) * scale * scale:
            raise SingularMatrix("matrix is singular")
        m = m / cmath.sqrt(det)
        m.setflags(write=False)
        self.matrix = m

    @classmethod
    def identity(cls):
        return cls(np.eye(2))

    @classmethod
    def from_entries(cls, a, b, c, d):
        return cls([[a, b], [c, d]])

    @property
    def a(self):
        return self.matrix[0, 0]

    @property
    def b(self):
        return self.matrix[0, 1]

    @property
    def c(self):
        return self.matrix[1, 0]

    @property
    def d(self):
        return self.matrix[1, 1]

    @property
    def trace(self):
        return self.matrix[0, 0] + self.matrix[1, 1]

    @property
    def tr2(self):
        return self.trace ** 2

    def __matmul__(self, other):
        if isinstance(other, MobiusMap):
            return MobiusMap(self.matrix @ other.matrix)
        return NotImplemented

    def inverse(self):
        a, b, c, d = self.matrix.ravel()
        return MobiusMap([[d, -b], [-c, a]])

    def __call__(self, p):
        return apply(self, p)

    def distance(self, other):
        """PSL2 distance: the smaller of ||M - N|| and ||M + N||."""
        return float(min(np.linalg.norm(self.matrix - other.matrix),
                         np.linalg.norm(self.matrix + other.matrix)))

    def isclose(self, other, eps=None):
        return self.distance(other) < tolerance.resolve(eps)

    def __eq__(self, other):
        if not isinstance(other, MobiusMap):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(f"{x:.6g}" for x in row) + "]" for row in self.matrix)
        return f"MobiusMap([{rows}])"


def apply(m, p):
    """Image of the point ``p`` under ``m``."""
    p = RiemannPoint.coerce(p)
    v = m.matrix @ np.array([p.z1, p.z2])
    return RiemannPoint(v[0], v[1])


def _is_identity(m, eps):
    return m.distance(MobiusMap.identity()) < eps


def classify(m, eps=None):
    eps = tolerance.resolve(eps)
    if _is_identity(m, eps):
        return MapClass.IDENTITY
    t2 = m.tr2
    if abs(t2 - 4.0) < eps:
        return MapClass.PARABOLIC
    if abs(t2.imag) < eps and -eps < t2.real < 4.0 - eps:
        return MapClass.ELLIPTIC
    return MapClass.LOXODROMIC


def _eigvec(m, lam):
    a, b, c, d = m.matrix.ravel()
    u = np.array([b, lam - a])
    v = np.array([lam - d, c])
    return u if np.linalg.norm(u) >= np.linalg.norm(v) else v


def fixed_points(m, eps=None):
    """Fixed points of a non-identity map (one for parabolic maps, two otherwise)."""
    eps = tolerance.resolve(eps)
    if _is_identity(m, eps):
        raise IdentityInput("the identity fixes every point")
    tr = m.trace
    disc = cmath.sqrt(tr * tr - 4.0)
    if classify(m, eps) is MapClass.PARABOLIC:
        v = _eigvec(m, tr / 2.0)
        return [RiemannPoint(*v)]
    pts = []
    for lam in ((tr + disc) / 2.0, (tr - disc) / 2.0):
        v = _eigvec(m, lam)
        pts.append(RiemannPoint(*v))
    return pts


def _fixed_point_error(m, p):
    v = m.matrix @ p.lift
    return abs(v[0] * p.z2 - v[1] * p.z1) / (np.linalg.norm(v) * np.linalg.norm(p.lift))


def rotation_angle(m, p, eps=None):
    """Anticlockwise rotation angle of the elliptic map ``m`` at its fixed point ``p``.

    Returned in (0, 2pi).  At ``p`` the derivative of ``m`` is ``e^{i theta}``.
    """
    eps = tolerance.resolve(eps)
    if classify(m, eps) is not MapClass.ELLIPTIC:
        raise NotElliptic("rotation angles are defined for elliptic maps only")
    p = RiemannPoint.coerce(p)
    if _fixed_point_error(m, p) > math.sqrt(eps):
        raise NotFixedPoint(f"{p!r} is not fixed by the map")
    # Eigenvalue mu on the lift of p; the derivative there is 1/mu^2.
    v = m.matrix @ p.lift
    w = p.lift
    k = 0 if abs(w[0]) >= abs(w[1]) else 1
    mu = v[k] / w[k]
    theta = -2.0 * cmath.phase(mu)
    return theta % TWO_PI


def rotation_invariant(m, eps=None):
    """The unordered pair {theta, 2pi - theta} with 4cos^2(theta/2) = tr^2."""
    eps = tolerance.resolve(eps)
    if classify(m, eps) is not MapClass.ELLIPTIC:
        raise NotElliptic("rotation invariants are defined for elliptic maps only")
    half = min(1.0, abs(m.trace) / 2.0)
    theta = 2.0 * math.acos(half)
    return (theta, TWO_PI - theta)


def _omega(u, v):
    return u[0] * v[1] - u[1] * v[0]


def normalize_triple(p1, p2, p3, eps=None):
    """The unique map sending ``p1, p2, p3`` to ``0, 1, inf``."""
    eps = tolerance.resolve(eps)
    u1, u2, u3 = (RiemannPoint.coerce(p).lift for p in (p1, p2, p3))
    k1 = _omega(u2, u3)
    k3 = _omega(u2, u1)
    if min(abs(k1), abs(k3), abs(_omega(u1, u3))) < eps:
        raise CoincidentPoints("normalize_triple needs three distinct points")
    # rows vanish on u1 and u3 respectively; the scalings make u2 go to 1
    mat = [[k1 * u1[1], -k1 * u1[0]], [k3 * u3[1], -k3 * u3[0]]]
    return MobiusMap(mat)
