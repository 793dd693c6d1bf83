"""Oriented circles of CP^1 as Hermitian forms.

A circle is ``H = [[A, B], [conj(B), C]]`` with zero set
``A|z|^2 + B conj(z) + conj(B) z + C = 0`` (lines are ``A = 0``).  Forms are
normalized to ``|B|^2 - AC = 1``; the remaining sign is the orientation, the
interior being ``{v* H v < 0}``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import tolerance
from .errors import CoincidentPoints, EqualCircles, PointNotOnCircles, TangentCircles
from .mobius import MobiusMap, RiemannPoint, apply, normalize_triple

__all__ = [
    "Circle",
    "AntiMobiusMap",
    "circle_through",
    "reflect",
    "intersect",
    "angle_at",
    "side_of",
    "transform_circle",
]

_ROUNDOFF = 64 * np.finfo(float).eps


class Circle:
    __slots__ = ("A", "B", "C")

    def __init__(self, A, B, C):
        A, C = float(A), float(C)
        B = complex(B)
        disc = abs(B) ** 2 - A * C
        if not disc > 0:
            raise ValueError("Hermitian form does not describe a circle")
        s = math.sqrt(disc)
        self.A, self.B, self.C = A / s, B / s, C / s

    @classmethod
    def from_hermitian(cls, h):
        h = np.asarray(h, dtype=complex)
        return cls(h[0, 0].real, h[0, 1], h[1, 1].real)

    @classmethod
    def from_center_radius(cls, center, radius):
        """Euclidean circle with the bounded disk as interior."""
        c = complex(center)
        return cls(1.0, -c, abs(c) ** 2 - radius ** 2)

    @classmethod
    def line(cls, point, direction):
        """Line through ``point`` along ``direction``; interior on the left."""
        p, u = complex(point), complex(direction)
        u /= abs(u)
        # f(z) = -Im((z - p) conj(u))
        return cls(0.0, -0.5j * u, (p * u.conjugate()).imag)

    @property
    def hermitian(self):
        return np.array([[self.A, self.B], [self.B.conjugate(), self.C]], dtype=complex)

    def is_line(self, eps=None):
        return abs(self.A) < tolerance.resolve(eps)

    def center_radius(self):
        """Euclidean center and radius; ``None`` for lines."""
        if self.A == 0:
            return None
        c = -self.B / self.A
        return c, 1.0 / abs(self.A)

    def form(self, p):
        """Value of v* H v on the normalized lift of ``p``."""
        v = RiemannPoint.coerce(p).lift
        return float((v.conj() @ self.hermitian @ v).real)

    def contains(self, p, eps=None):
        return abs(self.form(p)) < tolerance.resolve(eps)

    def reversed(self):
        return Circle(-self.A, -self.B, -self.C)

    def distance(self, other, oriented=False):
        d_same = float(np.linalg.norm(self.hermitian - other.hermitian))
        if oriented:
            return d_same
        return min(d_same, float(np.linalg.norm(self.hermitian + other.hermitian)))

    def isclose(self, other, eps=None, oriented=False):
        return self.distance(other, oriented) < tolerance.resolve(eps)

    def __eq__(self, other):
        if not isinstance(other, Circle):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def __repr__(self):
        return f"Circle(A={self.A:.6g}, B={self.B:.6g}, C={self.C:.6g})"


class AntiMobiusMap:
    """Orientation-reversing map ``v -> L conj(v)``."""

    __slots__ = ("linear",)

    def __init__(self, linear):
        self.linear = linear if isinstance(linear, MobiusMap) else MobiusMap(linear)

    def __call__(self, p):
        p = RiemannPoint.coerce(p)
        v = self.linear.matrix @ p.lift.conj()
        return RiemannPoint(v[0], v[1])

    def __matmul__(self, other):
        L = self.linear.matrix
        if isinstance(other, AntiMobiusMap):
            return MobiusMap(L @ other.linear.matrix.conj())
        if isinstance(other, MobiusMap):
            return AntiMobiusMap(MobiusMap(L @ other.matrix.conj()))
        return NotImplemented

    def __rmatmul__(self, other):
        if isinstance(other, MobiusMap):
            return AntiMobiusMap(MobiusMap(other.matrix @ self.linear.matrix))
        return NotImplemented

    def __repr__(self):
        return f"AntiMobiusMap({self.linear!r})"


def circle_through(p1, p2, p3, eps=None):
    """The circle through three distinct points, interior to the left of p1 -> p2 -> p3."""
    eps = tolerance.resolve(eps)
    pts = [RiemannPoint.coerce(p) for p in (p1, p2, p3)]
    for i in range(3):
        for j in range(i + 1, 3):
            if pts[i].distance(pts[j]) < eps:
                raise CoincidentPoints("circle_through needs three distinct points")
    rows = []
    for p in pts:
        v1, v2 = p.z1, p.z2
        w = v1.conjugate() * v2
        rows.append([abs(v1) ** 2, 2 * w.real, -2 * w.imag, abs(v2) ** 2])
    _, _, vh = np.linalg.svd(np.array(rows))
    A, br, bi, C = vh[-1]
    circ = Circle(A, complex(br, bi), C)
    t = normalize_triple(*pts)
    if circ.form(apply(t.inverse(), 1j)) > 0:
        circ = circ.reversed()
    return circ


def reflect(c):
    """Reflection in ``c`` as an anti-Möbius map."""
    L = 1j * np.array([[-c.B, -c.C], [c.A, c.B.conjugate()]])
    return AntiMobiusMap(MobiusMap(L))


def intersect(c1, c2, eps=None):
    """Intersection points of two circles: 0, 1 (tangency) or 2 points."""
    eps = tolerance.resolve(eps)
    if c1.isclose(c2, eps):
        raise EqualCircles("circles coincide")
    h2 = c2.hermitian
    lam, vec = np.linalg.eigh(c1.hermitian)
    # eigh sorts ascending: lam[0] < 0 < lam[1]
    u = vec[:, 1] / math.sqrt(lam[1])
    w = vec[:, 0] / math.sqrt(-lam[0])
    P = float((u.conj() @ h2 @ u).real + (w.conj() @ h2 @ w).real)
    Q = complex(u.conj() @ h2 @ w)
    disc = abs(Q) ** 2 - P * P / 4.0
    band = eps * eps + _ROUNDOFF * (abs(Q) ** 2 + P * P / 4.0)
    if disc < -band:
        return []
    phi = cmath.phase(Q)
    if disc <= band:
        ts = [math.pi - phi if P >= 0 else -phi]
    else:
        s = math.acos(max(-1.0, min(1.0, -P / (2.0 * abs(Q)))))
        ts = [-phi + s, -phi - s]
    return [RiemannPoint(*(u + cmath.exp(1j * t) * w)) for t in ts]


_INVERT = MobiusMap([[0, -1], [1, 0]])


def angle_at(c1, c2, x, eps=None):
    """Anticlockwise angle in (0, pi) from ``c1`` to ``c2`` at their common point ``x``."""
    eps = tolerance.resolve(eps)
    x = RiemannPoint.coerce(x)
    if not (c1.contains(x, math.sqrt(eps)) and c2.contains(x, math.sqrt(eps))):
        raise PointNotOnCircles(f"{x!r} is not on both circles")
    if abs(x.z2) < abs(x.z1):
        c1, c2 = transform_circle(_INVERT, c1), transform_circle(_INVERT, c2)
        x = apply(_INVERT, x)
    z = x.z1 / x.z2
    g1 = c1.A * z + c1.B
    g2 = c2.A * z + c2.B
    if abs(g1) == 0 or abs(g2) == 0:
        raise TangentCircles("degenerate gradient")
    theta = cmath.phase(g2 / g1) % math.pi
    if theta < eps or math.pi - theta < eps:
        raise TangentCircles("circles are tangent at the given point")
    return theta


def side_of(c, p, eps=None):
    """-1 inside, +1 outside, 0 on the circle."""
    val = c.form(p)
    if abs(val) < tolerance.resolve(eps):
        return 0
    return -1 if val < 0 else 1


def transform_circle(m, c):
    """Image of ``c`` under ``m``; orientation is carried along."""
    minv = m.inverse().matrix
    return Circle.from_hermitian(minv.conj().T @ c.hermitian @ minv)
