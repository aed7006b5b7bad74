"""numba switch.

Kernels are plain Python functions decorated with :func:`njit`. When numba
is importable and ``MIXDOM_NUMBA`` is not ``0``, they are compiled; otherwise
the decorator is the identity and the same source runs as ordinary Python on
lists of Python ints (arbitrary width bitmasks).
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("MIXDOM_NUMBA", "1") != "0"

# widest bitmask a compiled kernel can hold in an int64 without touching the sign bit
MAX_JIT_BITS = 62


def njit(fn):
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn


def python_impl(fn):
    """The uncompiled function behind a kernel, whichever mode is active."""
    return getattr(fn, "py_func", fn)
