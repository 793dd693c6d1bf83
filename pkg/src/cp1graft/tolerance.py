"""Global numerical tolerance.

The default ``1e-9`` can be overridden with the ``CP1GRAFT_EPS`` environment
variable or temporarily with :func:`tolerance`.
"""

import os
from contextlib import contextmanager

DEFAULT_EPS = 1e-9

_eps = float(os.environ.get("CP1GRAFT_EPS", DEFAULT_EPS))


def get_eps():
    return _eps


def set_eps(value):
    global _eps
    value = float(value)
    if not value > 0:
        raise ValueError("tolerance must be positive")
    _eps = value


@contextmanager
def tolerance(value):
    old = _eps
    set_eps(value)
    try:
        yield
    finally:
        set_eps(old)


def resolve(eps):
    return _eps if eps is None else eps
