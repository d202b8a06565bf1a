"""Backend dispatch for the closure kernels.

The compiled backend is used when the extension imported and the degree
fits its bytes encoding (< 256 points).  Setting ``BLOCKPRIM_PURE=1`` in
the environment forces the pure-Python backend; ``ACTIVE`` records which
one won so tests and benchmarks can report it.
"""

import os

from . import pyfallback

try:
    from . import _ckernel
except ImportError:  # pragma: no cover - depends on the build
    _ckernel = None

_FORCED_PURE = os.environ.get("BLOCKPRIM_PURE", "") not in ("", "0")

ACTIVE = "pure" if (_FORCED_PURE or _ckernel is None) else "compiled"


def _backend(degree: int):
    if ACTIVE == "compiled" and degree < 256:
        return _ckernel
    return pyfallback


def closure(degree, generators, cap):
    return _backend(degree).closure(degree, generators, cap)


def orbit(degree, generators, point):
    return _backend(degree).orbit(degree, generators, point)


def pair_orbit(degree, generators, u, v):
    return _backend(degree).pair_orbit(degree, generators, u, v)
