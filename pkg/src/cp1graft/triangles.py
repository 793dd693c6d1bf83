"""Atomic triangular immersions.

An atomic immersion is recorded combinatorially: its angle triple, the type
of its target triangle, the target angles, the sign pattern of its vertices
and the matching row of the atomic tables (``data/atomic_tables.json``).
:func:`realize` places it concretely on a circle configuration.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import numpy as np

from . import tolerance
from .angles import Angle, as_angle
from .circles import Circle, angle_at, circle_through, transform_circle
from .configurations import (
    CircleConfiguration,
    FramedTriple,
    Kind,
    build_configuration,
    coincidence_tol,
    dual_circle,
    from_elliptic_triple,
    to_elliptic_triple,
)
from .errors import (
    InvalidInput,
    MismatchedFraming,
    NotAtomic,
    OutOfRange,
    VerticesNotOnConfiguration,
)
from .mobius import RiemannPoint, apply, normalize_triple

__all__ = [
    "TableRow",
    "table_rows",
    "AtomicImmersion",
    "RealizedImmersion",
    "TargetDescriptor",
    "FramedRelation",
    "euclidean_case",
    "spherical_condition",
    "atomic_classify",
    "realize",
    "target_from_vertices",
    "same_framed_relation",
    "holonomy_of",
    "atomic_from_framed",
]

RANGES = {"small": (0, 1), "big": (1, 2), "huge": (2, 3)}
_KINDS = {"hyperbolic": Kind.HYPERBOLIC, "spherical": Kind.SPHERICAL, "euclidean": Kind.EUCLIDEAN}

# pairs of circle indices carrying V1, V2, V3 for circles (C12, C23, C13)
VERTEX_PAIRS = ((0, 2), (0, 1), (1, 2))


@dataclass(frozen=True)
class TableRow:
    id: str
    table: int
    kind: Kind
    ranges: tuple
    conditions: tuple
    targets: tuple
    signs: str
    star: bool

    def condition_text(self):
        return [c["text"] for c in self.conditions]


@lru_cache(maxsize=1)
def table_rows():
    """All rows of the atomic tables, in printed order."""
    raw = json.loads(resources.files("cp1graft").joinpath("data/atomic_tables.json").read_text())
    rows = []
    for r in raw["rows"]:
        rows.append(TableRow(
            id=r["id"], table=r["table"], kind=_KINDS[r["kind"]], ranges=tuple(r["ranges"]),
            conditions=tuple(r["conditions"]), targets=tuple(tuple(t) for t in r["targets"]),
            signs=r["signs"], star=r["star"],
        ))
    return tuple(rows)


def row_by_id(row_id):
    for r in table_rows():
        if r.id == row_id:
            return r
    raise KeyError(row_id)


# -- evaluation of linear forms in pi units -----------------------------------

def _qs(angles):
    qs = tuple(as_angle(x).q for x in angles)
    exact = all(isinstance(q, Fraction) for q in qs)
    return (qs if exact else tuple(float(q) for q in qs)), exact


def _form(coeffs, qs):
    ca, cb, cc, c0 = coeffs
    return ca * qs[0] + cb * qs[1] + cc * qs[2] + c0


def _holds(value, op, band):
    """Comparison of ``value`` against 0; ``band`` is the float equality band."""
    if op == "=":
        return abs(value) <= band
    if op == "<":
        return value < -band
    return value > band


def _angle(q, exact):
    return Angle(q=q) if exact else Angle(radians=float(q) * math.pi)


def euclidean_case(a, b, c, eps=None):
    """Which of a+b+c, -a+b+c, a-b+c, a+b-c equals pi, or ``None``."""
    qs, exact = _qs((a, b, c))
    band = 0 if exact else tolerance.resolve(eps)
    for tag, form in (("a+b+c=pi", (1, 1, 1, -1)), ("-a+b+c=pi", (-1, 1, 1, -1)),
                      ("a-b+c=pi", (1, -1, 1, -1)), ("a+b-c=pi", (1, 1, -1, -1))):
        if _holds(_form(form, qs), "=", band):
            return tag
    return None


def spherical_condition(a, b, c, eps=None):
    """Angles of a proper spherical triangle: sum above pi and the three triangle inequalities."""
    qs, exact = _qs((a, b, c))
    band = 0 if exact else tolerance.resolve(eps)
    forms = ((1, 1, 1, -1), (1, -1, -1, 1), (-1, 1, -1, 1), (-1, -1, 1, 1))
    return all(_holds(_form(f, qs), ">", band) for f in forms)


# -- classification -------------------------------------------------------------

@dataclass(frozen=True)
class AtomicImmersion:
    angles: tuple
    kind: Kind
    target_angles: tuple
    signs: str
    star: bool
    table_row: str
    big_slot: int | None
    approximate: bool = False

    @property
    def row(self):
        return row_by_id(self.table_row)

    @property
    def exact(self):
        return all(x.exact for x in self.angles)

    def indices(self):
        """The index triple (2a, 2b, 2c)."""
        return tuple(2 * x for x in self.angles)

    def descriptor(self):
        return (self.kind, self.signs, self.star)


def _range_of(q, band):
    for name, (lo, hi) in RANGES.items():
        if lo + band < q < hi - band:
            return name
    return None


def atomic_classify(a, b, c, eps=None):
    """Match an angle triple against the atomic tables."""
    angles = tuple(as_angle(x) for x in (a, b, c))
    qs, exact = _qs(angles)
    band = 0 if exact else tolerance.resolve(eps)
    ranges = []
    for q in qs:
        r = _range_of(q, band)
        if r is None:
            raise OutOfRange(f"angle {q}pi is not in (0,pi), (pi,2pi) or (2pi,3pi)")
        ranges.append(r)
    big = [i for i, r in enumerate(ranges) if r != "small"]
    if len(big) > 1:
        raise OutOfRange("at most one angle may exceed pi")
    big_slot = big[0] if big else None
    if big_slot is not None and ranges[big_slot] == "huge":
        i = big_slot
        others = sum(qs[j] for j in range(3) if j != i)
        if not _holds(qs[i] - others - 1, "=", band):
            raise NotAtomic("an angle in (2pi,3pi) needs big - other - other = pi")
    matches = []
    approximate = False
    for row in table_rows():
        if tuple(ranges) != row.ranges:
            continue
        values = [_form(cond["form"], qs) for cond in row.conditions]
        if all(_holds(v, cond["op"], band) for v, cond in zip(values, row.conditions)):
            matches.append(row)
            approximate = approximate or (not exact and any(abs(v) <= band for v in values))
    if len(matches) != 1:
        raise NotAtomic(f"angles {qs} match {len(matches)} table rows")
    row = matches[0]
    targets = tuple(_angle(_form(t, qs), exact) for t in row.targets)
    return AtomicImmersion(angles, row.kind, targets, row.signs, row.star, row.id, big_slot, approximate)


# -- realization ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TargetDescriptor:
    """Target triangle: circles (L12, L23, L13), vertices (Q1, Q2, Q3) in counterclockwise order."""

    circles: tuple
    vertices: tuple
    star: bool
    region: str

    def measured_angles(self, eps=None):
        l12, l23, l13 = self.circles
        q1, q2, q3 = self.vertices
        return (angle_at(l12, l13, q1, eps), angle_at(l23, l12, q2, eps), angle_at(l13, l23, q3, eps))


@dataclass(frozen=True, eq=False)
class RealizedImmersion:
    atomic: AtomicImmersion
    configuration: CircleConfiguration
    vertices: tuple
    target: TargetDescriptor

    def measured_target_angles(self, eps=None):
        return self.target.measured_angles(eps)

    def vertex_signs(self, eps=None):
        return _signs(self.vertices, self.target.vertices, eps)


def _signs(vertices, targets, eps=None):
    tol = coincidence_tol(eps)
    return "".join("+" if any(v.distance(q) < tol for q in targets) else "-" for v in vertices)


def _orient_away(circle, p):
    """Orient ``circle`` so that ``p`` is in its interior."""
    return circle if circle.form(p) < 0 else circle.reversed()


def _target_triangle(kind, ah, bh, ch):
    """Counterclockwise target triangle with Q1 = 0 and Q2 on the positive real axis."""
    if kind is Kind.EUCLIDEAN:
        q2 = 1.0
        q3 = math.sin(bh) / math.sin(ch) * cmath.exp(1j * ah)
        far = lambda p: None  # noqa: E731
    elif kind is Kind.HYPERBOLIC:
        cosh_c = (math.cos(ch) + math.cos(ah) * math.cos(bh)) / (math.sin(ah) * math.sin(bh))
        cosh_b = (math.cos(bh) + math.cos(ah) * math.cos(ch)) / (math.sin(ah) * math.sin(ch))
        q2 = math.tanh(math.acosh(cosh_c) / 2)
        q3 = math.tanh(math.acosh(cosh_b) / 2) * cmath.exp(1j * ah)
        far = lambda p: 1 / p.conjugate()  # noqa: E731
    else:
        cos_c = (math.cos(ch) + math.cos(ah) * math.cos(bh)) / (math.sin(ah) * math.sin(bh))
        cos_b = (math.cos(bh) + math.cos(ah) * math.cos(ch)) / (math.sin(ah) * math.sin(ch))
        q2 = math.tan(math.acos(cos_c) / 2)
        q3 = math.tan(math.acos(cos_b) / 2) * cmath.exp(1j * ah)
        far = lambda p: -1 / p.conjugate()  # noqa: E731
    l12 = Circle.line(0, 1)
    l13 = Circle.line(0, cmath.exp(1j * ah))
    third = far(q2)
    l23 = Circle.line(q2, q3 - q2) if third is None else circle_through(q2, q3, third)
    l12 = _orient_away(l12, q3)
    l13 = _orient_away(l13, q2)
    l23 = _orient_away(l23, 0)
    pts = tuple(RiemannPoint.from_complex(z) for z in (0, q2, q3))
    return (l12, l23, l13), pts


def realize(atomic, eps=None):
    """Concrete configuration and vertices for an atomic immersion in canonical position."""
    ah, bh, ch = (float(x) for x in atomic.target_angles)
    (l12, l23, l13), (q1, q2, q3) = _target_triangle(atomic.kind, ah, bh, ch)
    if atomic.star:
        circles, slots = (l13, l23, l12), (q1, q3, q2)
    else:
        circles, slots = (l12, l23, l13), (q1, q2, q3)
    cfg = build_configuration(*circles, eps=eps)
    vertices = tuple(q if s == "+" else cfg.other_point(pair, q)
                     for q, s, pair in zip(slots, atomic.signs, VERTEX_PAIRS))
    region = {Kind.EUCLIDEAN: "finite", Kind.HYPERBOLIC: "inside-dual", Kind.SPHERICAL: "target-face"}
    target = TargetDescriptor((l12, l23, l13), (q1, q2, q3), atomic.star, region[atomic.kind])
    return RealizedImmersion(atomic, cfg, vertices, target)


# -- target recovery ------------------------------------------------------------

def _arc_samples(circle, x, y, avoid, n=48):
    """Points along the arc of ``circle`` from ``x`` to ``y`` that avoids ``avoid``."""
    if circle.A == 0 or abs(circle.A) < 1e-12 * max(1.0, abs(circle.B), abs(circle.C)):
        return [x + (y - x) * t for t in np.linspace(0.0, 1.0, n)]
    center, radius = circle.center_radius()
    tx, ty = cmath.phase(x - center), cmath.phase(y - center)
    span = (ty - tx) % (2 * math.pi)
    if any((cmath.phase(z - center) - tx) % (2 * math.pi) < span for z in avoid):
        span -= 2 * math.pi
    return [center + radius * cmath.exp(1j * (tx + span * t)) for t in np.linspace(0.0, 1.0, n)]


def _is_ccw(cfg, p1, p2, p3, outside):
    """Whether the face with corners p1 (C12 n C13), p2 (C12 n C23), p3 (C23 n C13) is counterclockwise."""
    m = normalize_triple(p1, p2, outside)
    pts = cfg.distinct_points()
    tol = coincidence_tol()

    def chart(p):
        q = apply(m, p)
        return None if q.is_infinity(1e-14) else q.to_complex()

    corners = [chart(p) for p in (p1, p2, p3)]
    boundary = []
    for k, (i, j) in enumerate(((0, 1), (1, 2), (2, 0))):
        circ = cfg.circles[k]
        image = transform_circle(m, circ)
        on = [p for p in pts if circ.contains(p, tol)
              and min(p.distance(q) for q in (p1, p2, p3)) > tol]
        avoid = [z for z in (chart(p) for p in on) if z is not None]
        boundary.extend(_arc_samples(image, corners[i], corners[j], avoid)[:-1])
    z = np.array(boundary)
    area = 0.5 * np.sum(z.real * np.roll(z.imag, -1) - np.roll(z.real, -1) * z.imag)
    return area > 0


def _check_vertices(cfg, vertices, eps):
    tol = coincidence_tol(eps)
    vs = tuple(RiemannPoint.coerce(v) for v in vertices)
    for v, pair in zip(vs, VERTEX_PAIRS):
        if min(v.distance(p) for p in cfg.points(pair)) > tol:
            raise VerticesNotOnConfiguration(f"{v!r} is not an intersection of circles {pair}")
    return tuple(min(cfg.points(pair), key=v.distance) for v, pair in zip(vs, VERTEX_PAIRS))


def target_from_vertices(cfg, vertices, eps=None):
    """Recover the target triangle of an immersion from its configuration and vertices."""
    eps = tolerance.resolve(eps)
    v1, v2, v3 = _check_vertices(cfg, vertices, eps)
    c12, c23, c13 = cfg.circles
    if cfg.kind is Kind.EUCLIDEAN:
        cp = cfg.common_point
        p1, p2, p3 = (cfg.other_point(pair, cp) for pair in VERTEX_PAIRS)
        if _is_ccw(cfg, p1, p2, p3, cp):
            return TargetDescriptor((c12, c23, c13), (p1, p2, p3), False, "finite")
        return TargetDescriptor((c13, c23, c12), (p1, p3, p2), True, "finite")
    if cfg.kind is Kind.HYPERBOLIC:
        dual = dual_circle(cfg, eps)
        inside = tuple(min(cfg.points(pair), key=lambda p: dual.form(p)) for pair in VERTEX_PAIRS)
        outside = tuple(cfg.other_point(pair, p) for pair, p in zip(VERTEX_PAIRS, inside))
        faces = ((inside, outside, "inside-dual"), (outside, inside, "outside-dual"))
    else:
        own = (v1, v2, v3)
        other = tuple(cfg.other_point(pair, v) for pair, v in zip(VERTEX_PAIRS, own))
        faces = ((own, other, "vertex-face"), (other, own, "antipodal-face"))
    for face, rest, region in faces:
        if _is_ccw(cfg, *face, rest[0]):
            return TargetDescriptor((c12, c23, c13), face, False, region)
    raise InvalidInput("no counterclockwise target face found")


# -- framed holonomy --------------------------------------------------------------

@dataclass(frozen=True)
class FramedRelation:
    kind: str
    plus_slot: int | None = None
    minus_slot: int | None = None

    @property
    def is_equal(self):
        return self.kind == "equal"


def _same_targets(t1, t2, tol):
    return all(x.isclose(y, tol) for x, y in zip(t1.target_angles, t2.target_angles))


def same_framed_relation(t1, t2, eps=None):
    """Equal, or a shift of the angles by (pi, -pi, 0) up to permutation."""
    eps = tolerance.resolve(eps)
    if isinstance(t1, RealizedImmersion) and isinstance(t2, RealizedImmersion):
        if t1.configuration.distance(t2.configuration) > coincidence_tol(eps) or any(
                v.distance(w) > coincidence_tol(eps) for v, w in zip(t1.vertices, t2.vertices)):
            raise MismatchedFraming("realizations differ")
        t1, t2 = t1.atomic, t2.atomic
    if t1.descriptor() != t2.descriptor() or not _same_targets(t1, t2, math.sqrt(eps)):
        raise MismatchedFraming("different target triangles or signs")
    diff = [x - y for x, y in zip(t1.angles, t2.angles)]
    qs = [d.q for d in diff]
    exact = all(d.exact for d in diff)
    close = (lambda q, v: q == v) if exact else (lambda q, v: abs(q - v) <= math.sqrt(eps))
    if all(close(q, 0) for q in qs):
        return FramedRelation("equal")
    plus = [i for i, q in enumerate(qs) if close(q, 1)]
    minus = [i for i, q in enumerate(qs) if close(q, -1)]
    zero = [i for i, q in enumerate(qs) if close(q, 0)]
    if len(plus) == len(minus) == len(zero) == 1:
        return FramedRelation("pi_shift", plus[0], minus[0])
    raise MismatchedFraming(f"angle difference {qs} is not a pi shift")


def holonomy_of(r):
    """Framed holonomy: (J13 J12, J12 J23, J23 J13) framed at the vertices."""
    return FramedTriple(to_elliptic_triple(r.configuration), r.vertices)


def _solve_row(row, target_q):
    """Angles (pi units) of ``row`` producing the given target angles."""
    mat = np.array([t[:3] for t in row.targets], dtype=float)
    rhs = np.array(target_q) - np.array([t[3] for t in row.targets], dtype=float)
    return np.linalg.solve(mat, rhs)


def atomic_from_framed(ft, eps=None):
    """An atomic immersion realizing the framed triple ``ft``."""
    eps = tolerance.resolve(eps)
    cfg = from_elliptic_triple(ft.triple, eps)
    vertices = _check_vertices(cfg, ft.framing, eps)
    target = target_from_vertices(cfg, vertices, eps)
    signs = _signs(vertices, target.vertices, eps)
    measured = [x / math.pi for x in target.measured_angles(eps)]
    band = math.sqrt(eps)
    for row in table_rows():
        if (row.kind, row.signs, row.star) != (cfg.kind, signs, target.star):
            continue
        qs = _solve_row(row, measured)
        if not all(_range_of(q, band) == r for q, r in zip(qs, row.ranges)):
            continue
        values = [_form(c["form"], qs) for c in row.conditions]
        if not all(_holds(v, c["op"], band) for v, c in zip(values, row.conditions)):
            continue
        with tolerance.tolerance(band):
            atomic = atomic_classify(*(Angle(radians=q * math.pi) for q in qs))
        if atomic.table_row != row.id:
            continue
        return atomic, RealizedImmersion(atomic, cfg, vertices, target)
    raise InvalidInput("framed triple does not match any atomic table row")
