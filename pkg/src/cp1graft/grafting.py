"""Index arithmetic of grafting and the decomposition into atomic pieces.

Indices ``(I_alpha, I_beta, I_gamma)`` are twice the angles ``(a, b, c)``.
An edge graft along ``e_xy`` adds ``2pi`` to the indices at ``x`` and ``y``;
a core graft along ``e_x`` adds ``4pi`` to the index at ``x``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import tolerance
from .angles import Angle, as_angle
from .errors import (
    InvalidIndices,
    MismatchedFraming,
    NotSameFramedHolonomy,
    UnsupportedCurveShape,
)
from .triangles import AtomicImmersion, Kind, atomic_classify, same_framed_relation

__all__ = [
    "IndexTriple",
    "GraftingMultiCurve",
    "Decomposition",
    "GraftStatus",
    "Graftability",
    "apply_graft",
    "is_atomic_indices",
    "decompose",
    "graftability",
    "equalize",
]

# edge name -> the two slots it joins; the slot opposite an edge is the third one
EDGES = {"ab": (0, 1), "bc": (1, 2), "ac": (0, 2)}
CORES = {"a": 0, "b": 1, "c": 2}
OPPOSITE_EDGE = {0: "bc", 1: "ac", 2: "ab"}


def _is_int(q, band):
    if isinstance(q, Fraction):
        return q.denominator == 1
    return abs(q - round(q)) <= band


@dataclass(frozen=True)
class IndexTriple:
    """Indices at the three punctures, as exact or float angles."""

    indices: tuple

    def __post_init__(self):
        vals = tuple(as_angle(x) for x in self.indices)
        if len(vals) != 3:
            raise InvalidIndices("an index triple has three entries")
        object.__setattr__(self, "indices", vals)
        band = tolerance.get_eps()
        for x in vals:
            if x.q <= 0:
                raise InvalidIndices(f"index {x} is not positive")
            if _is_int(x.q / 2, band):
                raise InvalidIndices(f"index {x} is a multiple of 2pi")

    @classmethod
    def from_angles(cls, a, b, c):
        return cls(tuple(2 * as_angle(x) for x in (a, b, c)))

    @property
    def exact(self):
        return all(x.exact for x in self.indices)

    def angles(self):
        return tuple(x / 2 for x in self.indices)

    def thetas(self):
        """Reduced exponents I / 2pi."""
        return tuple(x.q / 2 for x in self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __getitem__(self, i):
        return self.indices[i]

    def isclose(self, other, tol=1e-9):
        return all(x.isclose(y, tol) for x, y in zip(self.indices, other.indices))


@dataclass(frozen=True)
class GraftingMultiCurve:
    """Multiplicities of the edge arcs ``e_ab, e_bc, e_ac`` and core arcs ``e_a, e_b, e_c``."""

    ab: int = 0
    bc: int = 0
    ac: int = 0
    a: int = 0
    b: int = 0
    c: int = 0

    def __post_init__(self):
        for name in ("ab", "bc", "ac", "a", "b", "c"):
            v = getattr(self, name)
            if int(v) != v or v < 0:
                raise ValueError(f"multiplicity {name}={v} must be a non-negative integer")

    @property
    def is_zero(self):
        return not any(self.as_dict().values())

    def as_dict(self):
        return {"ab": self.ab, "bc": self.bc, "ac": self.ac, "a": self.a, "b": self.b, "c": self.c}

    def edge(self, name):
        return getattr(self, name)

    def core(self, slot):
        return (self.a, self.b, self.c)[slot]

    def angle_bumps(self):
        """Multiples of pi added to each angle (half the index bump)."""
        bump = [2 * self.core(i) for i in range(3)]
        for name, (i, j) in EDGES.items():
            bump[i] += self.edge(name)
            bump[j] += self.edge(name)
        return tuple(bump)


def apply_graft(indices, curve):
    """Indices after grafting along ``curve``."""
    if not isinstance(indices, IndexTriple):
        indices = IndexTriple(indices)
    return IndexTriple(tuple(x + Angle.pi(2 * k) for x, k in zip(indices, curve.angle_bumps())))


def is_atomic_indices(indices, eps=None):
    """Angle ranges of an atomic structure, up to relabelling."""
    if not isinstance(indices, IndexTriple):
        indices = IndexTriple(indices)
    qs = [x.q / 2 for x in indices.indices]
    band = 0 if indices.exact else tolerance.resolve(eps)
    order = sorted(range(3), key=lambda i: -qs[i])
    a, b, c = (qs[i] for i in order)
    if not (band < b < 1 - band and band < c < 1 - band):
        return False
    if band < a < 2 - band and not _is_int(a, band):
        return True
    return 2 + band < a < 3 - band and abs(a - b - c - 1) <= band


class GraftStatus(enum.Enum):
    GRAFTABLE = "graftable"
    WITH_PERTURBATION = "graftable_with_perturbation"
    NOT_GRAFTABLE = "not_graftable"


@dataclass(frozen=True)
class Graftability:
    status: GraftStatus
    reason: str | None = None

    def __bool__(self):
        return self.status is not GraftStatus.NOT_GRAFTABLE


def _curve_shape(curve):
    cores = [i for i in range(3) if curve.core(i) > 0]
    if len(cores) > 1:
        raise UnsupportedCurveShape("at most one core arc may carry weight")
    if cores and curve.edge(OPPOSITE_EDGE[cores[0]]) > 0:
        raise UnsupportedCurveShape("a core arc cannot be combined with the opposite edge arc")
    return cores[0] if cores else None


def graftability(atomic, curve):
    """Whether ``atomic`` can be grafted along ``curve``."""
    core = _curve_shape(curve)
    row = atomic.table_row
    big = atomic.big_slot
    if atomic.kind is Kind.SPHERICAL:
        return Graftability(GraftStatus.GRAFTABLE)
    if atomic.kind is Kind.HYPERBOLIC:
        if row in ("H8", "H9", "H10") and curve.edge(OPPOSITE_EDGE[big]) > 0:
            return Graftability(GraftStatus.WITH_PERTURBATION,
                                "edge graft opposite the big angle needs a small deformation")
        return Graftability(GraftStatus.GRAFTABLE)
    if row in ("E2", "E3", "E4"):
        negative = atomic.signs.index("-")
        if core == negative:
            return Graftability(GraftStatus.NOT_GRAFTABLE, "core arc at the negative vertex")
    if row in ("E8", "E9", "E10", "E17", "E18", "E19"):
        if curve.edge(OPPOSITE_EDGE[big]) > 0:
            return Graftability(GraftStatus.NOT_GRAFTABLE, "edge arc joining the two negative vertices")
    return Graftability(GraftStatus.GRAFTABLE)


@dataclass(frozen=True)
class Decomposition:
    indices: IndexTriple
    atomic: AtomicImmersion
    curve: GraftingMultiCurve
    relabel: tuple
    perturbation: bool
    case: str
    exceptional: str | None
    pre_adjustment: dict = field(default_factory=dict)

    def atomic_indices(self):
        return IndexTriple(self.atomic.indices())

    def reconstruct(self):
        return apply_graft(self.atomic_indices(), self.curve)


def _floor(q):
    return math.floor(q)


def decompose(indices, eps=None):
    """Atomic structure plus grafting multi-curve with the given indices."""
    if not isinstance(indices, IndexTriple):
        indices = IndexTriple(indices)
    eps = tolerance.resolve(eps)
    exact = indices.exact
    band = 0 if exact else eps
    qs = [x.q / 2 for x in indices.indices]
    order = tuple(sorted(range(3), key=lambda i: -qs[i]))
    a, b, c = (qs[i] for i in order)
    ka, kb, kc = _floor(a), _floor(b), _floor(c)
    if ka >= kb + kc:
        case = "i"
        g_ac, g_ab, g_a, g_bc = kc, kb, (ka - kb - kc) // 2, 0
    else:
        case = "ii"
        lo, lp = ka - kb, kc + kb - ka
        g_ac, g_ab, g_a, g_bc = lo + lp // 2, kb - (lp + 1) // 2, 0, (lp + 1) // 2
    pre = {"ac": g_ac, "ab": g_ab, "a": g_a, "bc": g_bc, "k": (ka, kb, kc)}
    ra = a - (g_ac + g_ab + 2 * g_a)
    rb = b - (g_bc + g_ab)
    rc = c - (g_ac + g_bc)
    for q in (ra, rb, rc):
        if _is_int(q, band):
            raise InvalidIndices("reduced angle hit a multiple of pi")
    exceptional = None
    if g_a > 0 and 0 < ra < 1 and abs(-ra + rb + rc - 1) <= band:
        ra, g_a = ra + 2, g_a - 1
        exceptional = "core"
    elif g_bc > 0 and 1 < ra < 2 and abs(ra - rb - rc - 1) <= band:
        ra, rb = ra - 1, rb + 1
        g_ac, g_bc = g_ac + 1, g_bc - 1
        exceptional = "edge"

    # back to the original labels
    reduced = [None] * 3
    for slot, q in zip(order, (ra, rb, rc)):
        reduced[slot] = q
    edges = {"ab": 0, "bc": 0, "ac": 0}
    for (x, y), g in (((order[0], order[1]), g_ab), ((order[1], order[2]), g_bc), ((order[0], order[2]), g_ac)):
        edges[_edge_name(x, y)] += g
    cores = [0, 0, 0]
    cores[order[0]] = g_a
    curve = GraftingMultiCurve(**edges, a=cores[0], b=cores[1], c=cores[2])

    if exact:
        angles = tuple(Angle(q=Fraction(q)) for q in reduced)
    else:
        angles = tuple(Angle(radians=q * math.pi) for q in reduced)
    atomic = atomic_classify(*angles, eps=eps)
    status = graftability(atomic, curve)
    return Decomposition(indices, atomic, curve, order, status.status is GraftStatus.WITH_PERTURBATION,
                         case, exceptional, pre)


def _edge_name(i, j):
    i, j = sorted((i, j))
    return {(0, 1): "ab", (1, 2): "bc", (0, 2): "ac"}[(i, j)]


def equalize(d1, d2, eps=None):
    """One-edge grafts making two atomics with the same framed holonomy share indices."""
    t1 = d1.atomic if isinstance(d1, Decomposition) else d1
    t2 = d2.atomic if isinstance(d2, Decomposition) else d2
    try:
        rel = same_framed_relation(t1, t2, eps)
    except MismatchedFraming as exc:
        raise NotSameFramedHolonomy(str(exc)) from exc
    if rel.is_equal:
        return GraftingMultiCurve(), GraftingMultiCurve()
    mu1 = GraftingMultiCurve(**{OPPOSITE_EDGE[rel.plus_slot]: 1})
    mu2 = GraftingMultiCurve(**{OPPOSITE_EDGE[rel.minus_slot]: 1})
    return mu1, mu2
