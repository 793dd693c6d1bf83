"""Random generators shared by the test modules."""

import cmath
import math

import numpy as np

from cp1graft.circles import circle_through
from cp1graft.configurations import Kind, build_configuration
from cp1graft.errors import DegenerateConfiguration
from cp1graft.mobius import MobiusMap, RiemannPoint


def random_complex(rng, scale=2.0):
    return complex(rng.normal(scale=scale), rng.normal(scale=scale))


def random_mobius(rng):
    while True:
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        if abs(np.linalg.det(m)) > 0.1:
            return MobiusMap(m)


def random_elliptic(rng):
    """G diag(e^{it/2}, e^{-it/2}) G^{-1} with a random conjugator of moderate size."""
    t = rng.uniform(0.05, 2 * math.pi - 0.05)
    g = random_mobius(rng)
    d = MobiusMap(np.diag([cmath.exp(0.5j * t), cmath.exp(-0.5j * t)]))
    return g @ d @ g.inverse(), t


def random_circle(rng):
    pts = [random_complex(rng) for _ in range(3)]
    return circle_through(*pts)


def random_intersecting_pair(rng):
    """Two circles through two common random points."""
    x, y = random_complex(rng), random_complex(rng)
    c1 = circle_through(x, y, random_complex(rng))
    c2 = circle_through(x, y, random_complex(rng))
    return c1, c2, RiemannPoint.from_complex(x), RiemannPoint.from_complex(y)


def random_configuration(rng, kind=None):
    """A random non-degenerate configuration, optionally of a given kind."""
    while True:
        circles = [random_circle(rng) for _ in range(3)]
        try:
            cfg = build_configuration(*circles)
        except (DegenerateConfiguration, ValueError):
            continue
        if kind is None or cfg.kind is kind:
            return cfg


def random_euclidean(rng):
    """Three circles through a common random point."""
    while True:
        p = random_complex(rng)
        circles = [circle_through(p, random_complex(rng), random_complex(rng)) for _ in range(3)]
        try:
            cfg = build_configuration(*circles)
        except (DegenerateConfiguration, ValueError):
            continue
        if cfg.kind is Kind.EUCLIDEAN:
            return cfg


def _row_sample(row, den):
    """Exact angles (pi units) inside the region of ``row`` on a 1/den grid.

    Among grid points with at least half the best attainable margin, prefer
    ones with three distinct angles so that slot mix-ups cannot hide.
    """
    import itertools
    from fractions import Fraction

    from cp1graft.triangles import RANGES

    axes = []
    for r in row.ranges:
        lo, hi = RANGES[r]
        axes.append([Fraction(k, den) for k in range(lo * den + 1, hi * den)])
    found = []
    for qs in itertools.product(*axes):
        slack = min(min(q - RANGES[r][0], RANGES[r][1] - q) for q, r in zip(qs, row.ranges))
        ok = True
        for cond in row.conditions:
            ca, cb, cc, c0 = cond["form"]
            v = ca * qs[0] + cb * qs[1] + cc * qs[2] + c0
            if cond["op"] == "=":
                ok = v == 0
            elif cond["op"] == "<":
                ok, slack = v < 0, min(slack, -v)
            else:
                ok, slack = v > 0, min(slack, v)
            if not ok:
                break
        if ok:
            found.append((slack, qs))
    if not found:
        return None
    best = max(s for s, _ in found)
    good = [qs for s, qs in found if s >= best / 2]
    distinct = [qs for qs in good if len(set(qs)) == 3]
    pool = distinct or good
    return pool[len(pool) // 2]


def row_samples():
    """One exact angle triple per table row, keyed by row id."""
    from cp1graft.angles import Angle
    from cp1graft.triangles import table_rows

    if not hasattr(row_samples, "_cache"):
        out = {}
        for row in table_rows():
            qs = _row_sample(row, 12) or _row_sample(row, 60)
            out[row.id] = tuple(Angle(q=q) for q in qs)
        row_samples._cache = out
    return row_samples._cache
