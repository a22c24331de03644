"""Optional numba acceleration.

Set ``ENTROPORTRAIT_DISABLE_NUMBA=1`` to force the pure-numpy kernels. The
flag is read once, at import time.
"""

import os

DISABLE_ENV = "ENTROPORTRAIT_DISABLE_NUMBA"

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    numba = None
    HAVE_NUMBA = False


def _flag_set(name):
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


USE_NUMBA = HAVE_NUMBA and not _flag_set(DISABLE_ENV)


def njit(func):
    """``numba.njit(cache=True)`` when numba is importable, else identity."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func
