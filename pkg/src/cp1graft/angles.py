"""Angles that are either exact rational multiples of pi or plain floats.

An :class:`Angle` in exact mode stores the rational ``q`` of ``q*pi``; all
arithmetic and comparisons between exact angles stay in :class:`Fraction`.
As soon as a float angle takes part in an operation the result is a float
angle.  Exact to float conversion happens automatically, the reverse never.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = ["Angle", "pi_units", "parse_angle", "as_angle"]


class Angle:
    __slots__ = ("_q", "_rad")

    def __init__(self, q=None, radians=None):
        if (q is None) == (radians is None):
            raise TypeError("give exactly one of q (multiple of pi) or radians")
        if q is not None:
            if not isinstance(q, Rational):
                raise TypeError("exact angles need a rational multiple of pi")
            self._q = Fraction(q)
            self._rad = float(self._q) * math.pi
        else:
            self._q = None
            self._rad = float(radians)

    @classmethod
    def pi(cls, num, den=1):
        return cls(q=Fraction(num, den))

    @classmethod
    def from_radians(cls, x):
        return cls(radians=x)

    @property
    def exact(self):
        return self._q is not None

    @property
    def q(self):
        """Coefficient of pi (a Fraction in exact mode, a float otherwise)."""
        return self._q if self._q is not None else self._rad / math.pi

    @property
    def radians(self):
        return self._rad

    def __float__(self):
        return self._rad

    def to_float(self):
        return Angle(radians=self._rad)

    # arithmetic -----------------------------------------------------------

    def _combine(self, other, op):
        other = as_angle(other)
        if self._q is not None and other._q is not None:
            return Angle(q=op(self._q, other._q))
        return Angle(radians=op(self._rad, other._rad))

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y)

    def __radd__(self, other):
        return as_angle(other) + self

    def __rsub__(self, other):
        return as_angle(other) - self

    def __neg__(self):
        return Angle(q=-self._q) if self._q is not None else Angle(radians=-self._rad)

    def __mul__(self, k):
        if isinstance(k, Angle):
            return NotImplemented
        if self._q is not None and isinstance(k, Rational):
            return Angle(q=self._q * k)
        return Angle(radians=self._rad * float(k))

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, Angle):
            return NotImplemented
        if self._q is not None and isinstance(k, Rational):
            return Angle(q=self._q / Fraction(k))
        return Angle(radians=self._rad / float(k))

    # comparisons ----------------------------------------------------------

    def _cmp_key(self, other):
        other = as_angle(other)
        if self._q is not None and other._q is not None:
            return self._q, other._q
        return self._rad, other._rad

    def __eq__(self, other):
        try:
            x, y = self._cmp_key(other)
        except TypeError:
            return NotImplemented
        return x == y

    def __hash__(self):
        return hash(self._q) if self._q is not None else hash(self._rad)

    def __lt__(self, other):
        x, y = self._cmp_key(other)
        return x < y

    def __le__(self, other):
        x, y = self._cmp_key(other)
        return x <= y

    def __gt__(self, other):
        x, y = self._cmp_key(other)
        return x > y

    def __ge__(self, other):
        x, y = self._cmp_key(other)
        return x >= y

    def isclose(self, other, tol=1e-9):
        other = as_angle(other)
        if self._q is not None and other._q is not None:
            return self._q == other._q
        return abs(self._rad - other._rad) <= tol

    def floor_pi(self):
        """floor(angle / pi) as an int."""
        return math.floor(self._q) if self._q is not None else math.floor(self._rad / math.pi)

    def __repr__(self):
        if self._q is not None:
            return f"Angle.pi({self._q})"
        return f"Angle.from_radians({self._rad!r})"

    def __str__(self):
        if self._q is not None:
            return format_pi(self._q)
        return repr(self._rad)

    def to_json(self):
        if self._q is not None:
            return format_pi(self._q)
        return self._rad


def format_pi(q):
    q = Fraction(q)
    if q == 0:
        return "0"
    num = "" if q.numerator == 1 else ("-" if q.numerator == -1 else str(q.numerator))
    if q.denominator == 1:
        return f"{num}pi"
    return f"{num}pi/{q.denominator}"


def as_angle(x):
    if isinstance(x, Angle):
        return x
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return Angle(radians=x)
    raise TypeError(f"cannot interpret {x!r} as an angle")


def pi_units(x):
    """Value of ``x`` in units of pi: Fraction for exact angles, float otherwise."""
    return as_angle(x).q


_PI_LITERAL = re.compile(
    r"^\s*(?P<sign>[-+]?)\s*(?:(?P<num>\d+)(?:/(?P<den>\d+))?)?\s*\*?\s*pi(?:\s*/\s*(?P<den2>\d+))?\s*$"
)
_RATIONAL = re.compile(r"^\s*[-+]?\d+(?:/\d+)?\s*$")
_FLOAT = re.compile(r"^\s*[-+]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?\s*$")


def parse_angle(text):
    """Parse an angle literal.

    ``3/2pi``, ``pi/2``, ``2pi``, ``pi`` give exact angles; a bare number is
    radians in float mode.  Mixed forms such as ``1.5pi`` are rejected.
    """
    m = _PI_LITERAL.match(text)
    if m:
        if m.group("den") and m.group("den2"):
            raise ValueError(f"ambiguous angle literal {text!r}")
        num = int(m.group("num")) if m.group("num") else 1
        den = int(m.group("den") or m.group("den2") or 1)
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        q = Fraction(num, den)
        return Angle(q=-q if m.group("sign") == "-" else q)
    if "pi" in text:
        raise ValueError(f"ambiguous angle literal {text!r}")
    if _RATIONAL.match(text) and "/" in text:
        return Angle(radians=float(Fraction(text.strip())))
    if _FLOAT.match(text):
        return Angle(radians=float(text))
    raise ValueError(f"not an angle literal: {text!r}")
