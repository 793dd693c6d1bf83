"""Static SVG diagrams of configurations and realized immersions.

Two charts are offered: ``plane`` draws the affine chart with circles through
infinity clipped to the viewport, ``stereo`` draws the sphere seen from
outside (orthographically) with the far hemisphere dashed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

import numpy as np

from .mobius import RiemannPoint

SIZE = 480
COLORS = ("#1f77b4", "#d62728", "#2ca02c")


def _f(x):
    return f"{x:.3f}"


@dataclass
class SvgScene:
    """Styled primitives in viewport coordinates."""

    chart: str = "plane"
    items: list = field(default_factory=list)

    def polyline(self, pts, color, dashed=False, width=1.5):
        if len(pts) < 2:
            return
        coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in pts)
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.items.append(f'<polyline points="{coords}" fill="none" stroke="{color}" '
                          f'stroke-width="{width}"{dash}/>')

    def circle(self, cx, cy, r, color, dashed=False, fill="none", width=1.5):
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.items.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="{fill}" '
                          f'stroke="{color}" stroke-width="{width}"{dash}/>')

    def point(self, x, y, label=None, color="#000000"):
        self.items.append(f'<circle class="point" cx="{_f(x)}" cy="{_f(y)}" r="3" fill="{color}"/>')
        if label:
            self.items.append(f'<text x="{_f(x + 5)}" y="{_f(y - 5)}" font-size="11" '
                              f'font-family="sans-serif">{escape(label)}</text>')

    def to_svg(self):
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
                f'viewBox="0 0 {SIZE} {SIZE}">')
        body = "\n".join(self.items)
        return f'{head}\n<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>\n{body}\n</svg>\n'


class _PlaneView:
    def __init__(self, finite_pts):
        pts = [z for z in finite_pts if abs(z) < 1e6] or [0j]
        xs = [z.real for z in pts]
        ys = [z.imag for z in pts]
        cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
        half = max(max(xs) - min(xs), max(ys) - min(ys), 1.0) * 0.75
        self.center = complex(cx, cy)
        self.half = half
        self.scale = SIZE / (2 * half)

    def to_view(self, z):
        w = (z - self.center) * self.scale
        return SIZE / 2 + w.real, SIZE / 2 - w.imag

    def visible(self, x, y):
        return 0 <= x <= SIZE and 0 <= y <= SIZE


def _clip_segment(p, q):
    """Liang-Barsky clip of the segment pq to the viewport; None if it misses."""
    (x0, y0), (x1, y1) = p, q
    dx, dy = x1 - x0, y1 - y0
    t0, t1 = 0.0, 1.0
    for den, num in ((-dx, x0), (dx, SIZE - x0), (-dy, y0), (dy, SIZE - y0)):
        if den == 0:
            if num < 0:
                return None
            continue
        t = num / den
        if den < 0:
            t0 = max(t0, t)
        else:
            t1 = min(t1, t)
    if t0 > t1:
        return None
    return [(x0 + t0 * dx, y0 + t0 * dy), (x0 + t1 * dx, y0 + t1 * dy)]


def _plane_circle(scene, view, c, color, dashed=False):
    if abs(c.A) < 1e-12:
        u = 1j * c.B / abs(c.B)
        p0 = -c.C * c.B / (2 * abs(c.B) ** 2)
        foot = p0 + u * (u.conjugate() * (view.center - p0)).real
        ends = _clip_segment(*(view.to_view(foot + u * s) for s in (-2 * view.half, 2 * view.half)))
        if ends:
            scene.polyline(ends, color, dashed)
        return
    center, radius = c.center_radius()
    x, y = view.to_view(center)
    scene.circle(x, y, radius * view.scale, color, dashed)


def _stereo(z):
    """Inverse stereographic projection to the unit sphere."""
    if z is None:
        return np.array([0.0, 0.0, 1.0])
    d = 1 + abs(z) ** 2
    return np.array([2 * z.real / d, 2 * z.imag / d, (abs(z) ** 2 - 1) / d])


_VIEW_TILT = math.radians(25)


def _sphere_view(v):
    """Rotate so the viewer looks from slightly above the equator; returns (x, y, depth)."""
    c, s = math.cos(_VIEW_TILT), math.sin(_VIEW_TILT)
    x, y, z = v
    y2, z2 = c * y - s * z, s * y + c * z
    r = SIZE * 0.42
    return SIZE / 2 + r * x, SIZE / 2 - r * z2, y2


def _sphere_circle(scene, c, color, dashed_all=False):
    if abs(c.A) < 1e-12:
        # tan sampling runs out to the point at infinity so the great circle closes up
        t = np.tan(np.linspace(-math.pi / 2 + 1e-3, math.pi / 2 - 1e-3, 721))
        u = 1j * c.B / abs(c.B)
        p0 = -c.C * c.B / (2 * abs(c.B) ** 2)
        pts = [p0 + u * s for s in t]
    else:
        center, radius = c.center_radius()
        pts = list(center + radius * np.exp(1j * np.linspace(0, 2 * math.pi, 721)))
    proj = [_sphere_view(_stereo(z)) for z in pts]
    run, front = [], None
    for x, y, depth in proj:
        is_front = depth <= 0
        if front is None or is_front == front:
            run.append((x, y))
        else:
            scene.polyline(run, color, dashed=dashed_all or not front)
            run = [run[-1], (x, y)]
        front = is_front
    scene.polyline(run, color, dashed=dashed_all or not front)


def _affine(p):
    p = RiemannPoint.coerce(p)
    return None if p.is_infinity(1e-12) else p.to_complex()


def render(circles, points, chart="plane", dual=None):
    """SVG text for ``circles`` with labelled ``points`` ((label, point) pairs)."""
    if chart not in ("plane", "stereo"):
        raise ValueError(f"unknown chart {chart!r}")
    scene = SvgScene(chart)
    if chart == "stereo":
        scene.circle(SIZE / 2, SIZE / 2, SIZE * 0.42, "#999999", width=0.8)
        for c, color in zip(circles, COLORS):
            _sphere_circle(scene, c, color)
        if dual is not None:
            _sphere_circle(scene, dual, "#555555", dashed_all=True)
        for label, p in points:
            x, y, depth = _sphere_view(_stereo(_affine(p)))
            scene.point(x, y, label, "#000000" if depth <= 0 else "#888888")
        return scene.to_svg()

    finite = [z for z in (_affine(p) for _, p in points) if z is not None]
    view = _PlaneView(finite)
    for c, color in zip(circles, COLORS):
        _plane_circle(scene, view, c, color)
    if dual is not None:
        _plane_circle(scene, view, dual, "#555555", dashed=True)
    at_inf = 0
    for label, p in points:
        z = _affine(p)
        if z is None:
            at_inf += 1
            scene.items.append(f'<text x="{_f(SIZE - 70)}" y="{_f(4 + 14 * at_inf)}" font-size="11" '
                               f'font-family="sans-serif">{escape(label)} = inf</text>')
            continue
        x, y = view.to_view(z)
        if view.visible(x, y):
            scene.point(x, y, label)
    return scene.to_svg()


__all__ = ["SvgScene", "render"]
