"""Numba switch for the hot kernels.

Set ``PQX_DISABLE_NUMBA=1`` before import to run every kernel as plain Python
over numpy arrays. The jitted functions keep the uncompiled body available as
``.py_func``; :func:`python_impl` returns it in either mode.
"""

import os

_DISABLED = os.environ.get("PQX_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by PQX_DISABLE_NUMBA")
    import numba

    HAS_NUMBA = True
except ImportError:
    numba = None
    HAS_NUMBA = False


def njit(func=None, **kwargs):
    """``numba.njit(cache=True)`` when numba is active, identity otherwise."""
    def wrap(f):
        if HAS_NUMBA:
            return numba.njit(cache=True, **kwargs)(f)
        return f

    if func is None:
        return wrap
    return wrap(func)


def python_impl(kernel):
    return getattr(kernel, "py_func", kernel)
