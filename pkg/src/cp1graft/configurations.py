"""Ordered triples of circles and their elliptic triples of reflections products."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import tolerance
from .circles import Circle, angle_at, circle_through, intersect, reflect, side_of, transform_circle
from .errors import (
    DegenerateConfiguration,
    DegenerateTriple,
    EqualCircles,
    InvalidInput,
    MismatchedInputs,
    NotElliptic,
    NotFixedPoint,
    NotHyperbolic,
    PathologicalFraming,
)
from .mobius import MapClass, MobiusMap, RiemannPoint, apply, classify, fixed_points, normalize_triple, rotation_angle

__all__ = [
    "Kind",
    "PAIRS",
    "CircleConfiguration",
    "EllipticTriple",
    "FramedTriple",
    "build_configuration",
    "dual_circle",
    "to_elliptic_triple",
    "from_elliptic_triple",
    "verify_vertex_rotation",
    "map_between",
    "separation_signs",
    "inversive_product",
    "coincidence_tol",
]

# Pair (i, j) of circle indices; with (C1, C2, C3) = (C12, C23, C13) the pairs
# (0, 2), (0, 1), (1, 2) carry the vertices V1, V2, V3.
PAIRS = ((0, 1), (1, 2), (0, 2))


class Kind(enum.Enum):
    EUCLIDEAN = "euclidean"
    SPHERICAL = "spherical"
    HYPERBOLIC = "hyperbolic"


def coincidence_tol(eps=None):
    """Distance below which two computed intersection points are identified."""
    return 1e3 * tolerance.resolve(eps)


def _same(p, q, eps=None):
    return p.distance(q) < coincidence_tol(eps)


@dataclass(frozen=True, eq=False)
class CircleConfiguration:
    circles: tuple
    intersections: dict
    kind: Kind
    common_point: RiemannPoint | None = None

    def points(self, pair):
        return self.intersections[tuple(sorted(pair))]

    def other_point(self, pair, p):
        """The intersection point of ``pair`` distinct from ``p``."""
        x, y = self.points(pair)
        return y if x.distance(p) <= y.distance(p) else x

    def distinct_points(self):
        out = []
        for pair in PAIRS:
            for p in self.intersections[pair]:
                if not any(_same(p, q) for q in out):
                    out.append(p)
        return out

    def distance(self, other):
        """Largest unoriented Hermitian-form distance between matching circles."""
        return max(a.distance(b) for a, b in zip(self.circles, other.circles))

    def transformed(self, m):
        return build_configuration(*(transform_circle(m, c) for c in self.circles))

    def cyclic_order_at_common_point(self):
        """Circle indices sorted by tangent direction at the common point.

        Only defined for Euclidean configurations; the order is read in the
        chart where the common point is finite.
        """
        if self.common_point is None:
            raise InvalidInput("cyclic order is defined for Euclidean configurations only")
        p = self.common_point
        ref = self.circles[0]
        angles = [0.0] + [angle_at(ref, c, p) for c in self.circles[1:]]
        return tuple(int(i) for i in np.argsort(angles, kind="stable"))


def build_configuration(c1, c2, c3, eps=None):
    """Classify the ordered triple ``(c1, c2, c3)``."""
    eps = tolerance.resolve(eps)
    circles = (c1, c2, c3)
    inter = {}
    for i, j in PAIRS:
        try:
            pts = intersect(circles[i], circles[j], eps)
        except EqualCircles as exc:
            raise DegenerateConfiguration("two circles coincide") from exc
        if len(pts) != 2:
            raise DegenerateConfiguration(f"circles {i + 1} and {j + 1} meet in {len(pts)} point(s)")
        inter[(i, j)] = tuple(pts)

    common = [p for p in inter[(0, 1)] if any(_same(p, q, eps) for q in inter[(1, 2)])
              and any(_same(p, q, eps) for q in inter[(0, 2)])]
    if len(common) >= 2:
        raise DegenerateConfiguration("the three circles share two points")
    if common:
        cp = common[0]
        for pair in PAIRS:
            x, y = inter[pair]
            inter[pair] = (x, y) if x.distance(cp) < y.distance(cp) else (y, x)
        return CircleConfiguration(circles, inter, Kind.EUCLIDEAN, cp)
    x23, y23 = inter[(1, 2)]
    s = side_of(c1, x23, eps) * side_of(c1, y23, eps)
    if s == 0:
        raise DegenerateConfiguration("intersection point lies on the third circle")
    kind = Kind.SPHERICAL if s < 0 else Kind.HYPERBOLIC
    return CircleConfiguration(circles, inter, kind)


def separation_signs(cfg, eps=None):
    """For each circle, whether it separates the intersection points of the other two."""
    out = []
    for k, pair in ((0, (1, 2)), (1, (0, 2)), (2, (0, 1))):
        x, y = cfg.intersections[pair]
        out.append(side_of(cfg.circles[k], x, eps) * side_of(cfg.circles[k], y, eps) < 0)
    return tuple(out)


def inversive_product(c1, c2):
    """Symmetric bilinear pairing of two forms; zero iff the circles are orthogonal."""
    return 0.5 * (c1.A * c2.C + c2.A * c1.C) - (c1.B * c2.B.conjugate()).real


def dual_circle(cfg, eps=None):
    """The circle orthogonal to all three circles of a hyperbolic configuration."""
    eps = tolerance.resolve(eps)
    if cfg.kind is not Kind.HYPERBOLIC:
        raise NotHyperbolic(f"configuration is {cfg.kind.value}")
    rows = [[c.C, -2 * c.B.real, -2 * c.B.imag, c.A] for c in cfg.circles]
    _, _, vh = np.linalg.svd(np.array(rows))
    A, br, bi, C = vh[-1]
    if br * br + bi * bi - A * C <= eps:
        raise NotHyperbolic("no real circle orthogonal to the configuration")
    dual = Circle(A, complex(br, bi), C)
    if dual.A < 0 or (abs(dual.A) < eps and dual.C > 0):
        dual = dual.reversed()
    return dual


@dataclass(frozen=True, eq=False)
class EllipticTriple:
    """Elliptic maps ``(A, B, C)`` with ``A B C = 1`` in PSL2."""

    maps: tuple
    product_sign: int = 1

    def __post_init__(self):
        if len(self.maps) != 3:
            raise InvalidInput("an elliptic triple has three maps")
        eps = tolerance.get_eps()
        for m in self.maps:
            if classify(m, eps) is not MapClass.ELLIPTIC:
                raise NotElliptic(f"{m!r} is not elliptic")
        prod = self.maps[0].matrix @ self.maps[1].matrix @ self.maps[2].matrix
        sign = 1 if np.linalg.norm(prod - np.eye(2)) <= np.linalg.norm(prod + np.eye(2)) else -1
        if np.linalg.norm(prod - sign * np.eye(2)) > math.sqrt(eps):
            raise InvalidInput("product of the triple is not the identity")
        object.__setattr__(self, "product_sign", sign)

    def __iter__(self):
        return iter(self.maps)

    def distance(self, other):
        return max(a.distance(b) for a, b in zip(self.maps, other.maps))


@dataclass(frozen=True, eq=False)
class FramedTriple:
    triple: EllipticTriple
    framing: tuple

    def __post_init__(self):
        framing = tuple(RiemannPoint.coerce(p) for p in self.framing)
        object.__setattr__(self, "framing", framing)
        tol = math.sqrt(tolerance.get_eps())
        for m, p in zip(self.triple.maps, framing):
            if apply(m, p).distance(p) > tol:
                raise NotFixedPoint(f"{p!r} is not fixed by its generator")
        if _same(framing[0], framing[1]) and _same(framing[1], framing[2]):
            raise PathologicalFraming("all framing points coincide")


def to_elliptic_triple(cfg):
    """``(J3 J1, J1 J2, J2 J3)`` for the configuration ``(C1, C2, C3)``."""
    j1, j2, j3 = (reflect(c) for c in cfg.circles)
    return EllipticTriple((j3 @ j1, j1 @ j2, j2 @ j3))


def _circle_on(points, eps):
    """Circle through the best-spread three of ``points``; the rest must lie on it."""
    distinct = []
    for p in points:
        if not any(_same(p, q, eps) for q in distinct):
            distinct.append(p)
    if len(distinct) < 3:
        raise DegenerateTriple("two generators share both fixed points")
    best = max(itertools.combinations(distinct, 3),
               key=lambda t: min(a.distance(b) for a, b in itertools.combinations(t, 2)))
    circ = circle_through(*best, eps=eps)
    for p in distinct:
        if abs(circ.form(p)) > coincidence_tol(eps):
            raise DegenerateTriple("fixed points of two generators are not concyclic")
    return circ


def from_elliptic_triple(t, eps=None):
    """``(A, B, C) -> (C_AB, C_BC, C_AC)``; orientations are not recovered."""
    eps = tolerance.resolve(eps)
    fa, fb, fc = (fixed_points(m, eps) for m in t.maps)
    c_ab = _circle_on(fa + fb, eps)
    c_bc = _circle_on(fb + fc, eps)
    c_ac = _circle_on(fa + fc, eps)
    try:
        return build_configuration(c_ab, c_bc, c_ac, eps)
    except DegenerateConfiguration as exc:
        raise DegenerateTriple(str(exc)) from exc


@dataclass(frozen=True)
class GeneratorCheck:
    name: str
    rotation_residual: float
    map_distance: float
    fixed_points: tuple

    @property
    def residual(self):
        return max(self.rotation_residual, self.map_distance)


@dataclass(frozen=True)
class VertexRotationReport:
    checks: tuple

    @property
    def max_residual(self):
        return max(c.residual for c in self.checks)

    def passed(self, tol=1e-8):
        return self.max_residual < tol


def _angle_gap(x, y):
    d = (x - y) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def verify_vertex_rotation(t, cfg, eps=None):
    """Check ``A = J3 J1`` with ``Rot(A, p) = 2 angle_p(C1, C3)`` and the analogues for B, C."""
    eps = tolerance.resolve(eps)
    c1, c2, c3 = cfg.circles
    j1, j2, j3 = (reflect(c) for c in cfg.circles)
    cases = (("A", t.maps[0], c1, c3, j3 @ j1),
            ("B", t.maps[1], c2, c1, j1 @ j2),
            ("C", t.maps[2], c3, c2, j2 @ j3))
    checks = []
    for name, g, first, second, product in cases:
        fps = fixed_points(g, eps)
        res = 0.0
        for p in fps:
            if not (first.contains(p, coincidence_tol(eps)) and second.contains(p, coincidence_tol(eps))):
                raise MismatchedInputs(f"fixed point of {name} is not on the expected circles")
            res = max(res, _angle_gap(rotation_angle(g, p, eps), 2 * angle_at(first, second, p, eps)))
        checks.append(GeneratorCheck(name, res, g.distance(product), tuple(fps)))
    return VertexRotationReport(tuple(checks))


def map_between(cfg1, points1, cfg2, points2, eps=None):
    """The Möbius map sending three labelled points of ``cfg1`` to those of ``cfg2``.

    Raises :class:`MismatchedInputs` unless it also carries each circle of
    ``cfg1`` onto the matching circle of ``cfg2``.
    """
    eps = tolerance.resolve(eps)
    m = normalize_triple(*points2).inverse() @ normalize_triple(*points1)
    for a, b in zip(cfg1.circles, cfg2.circles):
        if transform_circle(m, a).distance(b) > coincidence_tol(eps):
            raise MismatchedInputs("angle data of the configurations do not match")
    return m
