"""Kernel backend selection.

Hot kernels live in :mod:`rwalk._kernels_impl` as plain Python functions over
numpy arrays.  By default they are compiled with numba; setting the
environment variable ``RWALK_BACKEND=python`` before import selects the pure
interpreted fallback instead (same code, same results, slower).

RWALK_BACKEND values:
    auto    (default) use numba when importable, else pure python
    numba   require numba; raise if it cannot be imported
    python  pure python fallback
"""

import os

_CHOICE = os.environ.get("RWALK_BACKEND", "auto").strip().lower()

if _CHOICE not in ("auto", "numba", "python"):
    raise RuntimeError(f"RWALK_BACKEND must be auto|numba|python, got {_CHOICE!r}")

USING_NUMBA = False

if _CHOICE in ("auto", "numba"):
    try:
        import numba  # noqa: F401

        USING_NUMBA = True
    except ImportError:
        if _CHOICE == "numba":
            raise


def backend_name() -> str:
    return "numba" if USING_NUMBA else "python"


def jit(func):
    """Compile ``func`` with numba when the numba backend is active."""
    if USING_NUMBA:
        import numba

        return numba.njit(cache=True)(func)
    return func
