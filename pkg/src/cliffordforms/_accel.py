"""Optional numba acceleration.

Set ``CLIFFORDFORMS_DISABLE_NUMBA=1`` to run every kernel as plain Python/numpy.
The flag is read once at import time.
"""

import os

_flag = os.environ.get("CLIFFORDFORMS_DISABLE_NUMBA", "").strip().lower()
DISABLED = _flag not in ("", "0", "false", "no")

try:
    if DISABLED:
        raise ImportError
    import numba as _numba
except ImportError:  # numba missing or disabled
    _numba = None

USING_NUMBA = _numba is not None


def njit(*args, **kwargs):
    """``numba.njit`` when available and enabled, otherwise the identity decorator."""
    if _numba is not None:
        return _numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrapper(f):
        return f

    return wrapper
