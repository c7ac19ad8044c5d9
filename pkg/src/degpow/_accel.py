"""Kernel compilation switch.

Set ``DEGPOW_DISABLE_NUMBA=1`` to run every kernel as plain Python over numpy
arrays.  Numba is also skipped automatically when it is not importable.
The original Python function stays reachable as ``kernel.py_func`` either way.
"""

from __future__ import annotations

import os

DISABLED = os.environ.get("DEGPOW_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if DISABLED:
        raise ImportError
    from numba import njit as _njit

    NUMBA = True
except ImportError:
    _njit = None
    NUMBA = False


def kernel(fn):
    if NUMBA:
        return _njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn


def backend() -> str:
    return "numba" if NUMBA else "python"
