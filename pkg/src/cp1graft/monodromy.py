"""Monodromy of u'' + (q/2) u = 0 along loops in C minus {0, 1}.

A fundamental matrix ``Y = [[u1, u2], [u1', u2']]`` starting at the identity
is transported along a loop; the monodromy is its final value.  Transport
along a concatenation ``g1 * g2`` (first ``g1``) is ``M(g2) @ M(g1)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .differentials import DifferentialParams
from .errors import IntegrationFailure, InvalidInput

__all__ = [
    "Segment",
    "Arc",
    "LoopPath",
    "MonodromyResult",
    "integrate_monodromy",
    "loop_around",
    "standard_loops",
    "peripheral_traces",
    "cross_check_atomic",
    "predicted_tr2",
]

BASEPOINT = 0.5
CLEARANCE = 0.05
DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class Segment:
    start: complex
    end: complex

    def point(self, s):
        return self.start + (self.end - self.start) * s

    def velocity(self, s):
        return self.end - self.start

    def reversed(self):
        return Segment(self.end, self.start)


@dataclass(frozen=True)
class Arc:
    center: complex
    radius: float
    t0: float
    t1: float

    def point(self, s):
        return self.center + self.radius * cmath.exp(1j * (self.t0 + (self.t1 - self.t0) * s))

    def velocity(self, s):
        t = self.t0 + (self.t1 - self.t0) * s
        return 1j * self.radius * (self.t1 - self.t0) * cmath.exp(1j * t)

    def reversed(self):
        return Arc(self.center, self.radius, self.t1, self.t0)

    @property
    def start(self):
        return self.point(0.0)

    @property
    def end(self):
        return self.point(1.0)


@dataclass(frozen=True)
class LoopPath:
    """Closed piecewise path; ``winding`` maps each puncture to its winding number."""

    pieces: tuple
    winding: dict
    clearance: float = CLEARANCE

    def __post_init__(self):
        if not self.pieces:
            raise InvalidInput("a loop needs at least one piece")
        for p, q in zip(self.pieces, self.pieces[1:] + self.pieces[:1]):
            if abs(p.end - q.start) > 1e-12:
                raise InvalidInput("loop pieces do not join up")
        for piece in self.pieces:
            for s in np.linspace(0.0, 1.0, 257):
                z = piece.point(s)
                if min(abs(z), abs(z - 1)) < self.clearance:
                    raise InvalidInput(f"path passes within {self.clearance} of a puncture")

    @property
    def basepoint(self):
        return self.pieces[0].start

    def reversed(self):
        return LoopPath(tuple(p.reversed() for p in reversed(self.pieces)),
                        {k: -v for k, v in self.winding.items()}, self.clearance)

    def __mul__(self, other):
        """Concatenation: first ``self``, then ``other``."""
        winding = dict(self.winding)
        for k, v in other.winding.items():
            winding[k] = winding.get(k, 0) + v
        return LoopPath(self.pieces + other.pieces, winding, min(self.clearance, other.clearance))


def loop_around(puncture, radius=0.25, basepoint=BASEPOINT):
    """Counterclockwise loop around 0 or 1 from ``basepoint`` via a straight connector."""
    if puncture == 0:
        foot, t0 = complex(radius), 0.0
    elif puncture == 1:
        foot, t0 = complex(1 - radius), math.pi
    else:
        raise InvalidInput("loops are built around 0 or 1")
    base = complex(basepoint)
    pieces = [Arc(complex(puncture), radius, t0, t0 + 2 * math.pi)]
    if abs(foot - base) > 0:
        pieces = [Segment(base, foot)] + pieces + [Segment(foot, base)]
    return LoopPath(tuple(pieces), {puncture: 1})


def standard_loops():
    """Loops (alpha, beta, gamma) around 0, 1, inf with alpha * beta * gamma trivial."""
    alpha = loop_around(0)
    beta = loop_around(1)
    gamma = (alpha * beta).reversed()
    return alpha, beta, gamma


def _rhs_factory(p, piece):
    c0, c1, cm = p.coefficients()

    def rhs(s, y):
        z = piece.point(s)
        half_q = 0.5 * (c0 / z**2 + c1 / (z - 1) ** 2 + cm / (z * (z - 1)))
        dz = piece.velocity(s)
        # y = (u1, u2, u1', u2')
        return np.array([dz * y[2], dz * y[3], -dz * half_q * y[0], -dz * half_q * y[1]])

    return rhs


@dataclass(frozen=True)
class Transport:
    matrix: np.ndarray
    wronskian_drift: float


def _transport(p, loop, tol):
    y = np.array([1, 0, 0, 1], dtype=complex)
    drift = 0.0
    for piece in loop.pieces:
        sol = solve_ivp(_rhs_factory(p, piece), (0.0, 1.0), y, method="RK45",
                        rtol=tol, atol=tol * 1e-2)
        if not sol.success:
            raise IntegrationFailure(sol.message)
        dets = sol.y[0] * sol.y[3] - sol.y[1] * sol.y[2]
        drift = max(drift, float(np.max(np.abs(dets - 1))))
        y = sol.y[:, -1]
    return Transport(np.array([[y[0], y[1]], [y[2], y[3]]]), drift)


def integrate_monodromy(p, loop, tol=DEFAULT_TOL):
    """Monodromy matrix of the loop (fundamental matrix transported from the identity)."""
    if tol <= 0:
        raise InvalidInput("tolerance must be positive")
    if not isinstance(p, DifferentialParams):
        p = DifferentialParams(tuple(p))
    return _transport(p, loop, tol).matrix


def predicted_tr2(theta):
    """4 cos^2(pi theta): squared trace of the local monodromy for exponent theta."""
    return 4 * cmath.cos(cmath.pi * complex(theta)) ** 2


@dataclass(frozen=True)
class MonodromyResult:
    theta: tuple
    matrices: tuple
    wronskian_drift: float
    product_residual: float
    secondary_tr2_inf: complex

    @property
    def traces(self):
        return tuple(complex(np.trace(m)) for m in self.matrices)

    @property
    def tr2(self):
        return tuple(t * t for t in self.traces)

    @property
    def predicted(self):
        return tuple(predicted_tr2(t) for t in self.theta)

    @property
    def tr2_residuals(self):
        return tuple(abs(x - y) for x, y in zip(self.tr2, self.predicted))

    @property
    def det_residual(self):
        return max(abs(np.linalg.det(m) - 1) for m in self.matrices)


def peripheral_traces(p, tol=DEFAULT_TOL, secondary=True):
    """Monodromy around 0, 1 and inf at the basepoint 1/2 plus the group-relation residual."""
    if not isinstance(p, DifferentialParams):
        p = DifferentialParams(tuple(p))
    loops = standard_loops()
    transports = [_transport(p, loop, tol) for loop in loops]
    m0, m1, minf = (t.matrix for t in transports)
    prod = minf @ m1 @ m0
    eye = np.eye(2)
    residual = float(min(np.linalg.norm(prod - eye), np.linalg.norm(prod + eye)))
    drift = max(t.wronskian_drift for t in transports)
    tr2_big = complex("nan")
    if secondary:
        big = LoopPath((Arc(0j, 10.0, 0.0, 2 * math.pi),), {0: 1, 1: 1})
        big_t = _transport(p, big, tol)
        tr2_big = complex(np.trace(big_t.matrix)) ** 2
        drift = max(drift, big_t.wronskian_drift)
    return MonodromyResult(tuple(p.theta), (m0, m1, minf), drift, residual, tr2_big)


@dataclass(frozen=True)
class CrossCheckReport:
    theta: tuple
    tr2_ode: tuple
    tr2_holonomy: tuple
    residuals: tuple
    monodromy: MonodromyResult

    @property
    def max_residual(self):
        return max(self.residuals)


def cross_check_atomic(r, tol=DEFAULT_TOL):
    """Compare ODE monodromy traces with the reflection-group holonomy of a realized atomic."""
    from .triangles import holonomy_of

    theta = tuple(float(x) / math.pi for x in r.atomic.angles)
    result = peripheral_traces(DifferentialParams(theta), tol, secondary=False)
    framed = holonomy_of(r)
    tr2_hol = tuple(complex(m.tr2) for m in framed.triple.maps)
    residuals = tuple(abs(x - y) for x, y in zip(result.tr2, tr2_hol))
    return CrossCheckReport(theta, result.tr2, tr2_hol, residuals, result)
