"""Backend selection for the numeric kernels.

Numba is used when it imports cleanly and ``ORDFACT_DISABLE_NUMBA`` is unset
(or set to ``0``/``false``).  Everything has a pure-numpy fallback, and the two
paths must give identical results.
"""

import os

_FALSY = ("", "0", "false", "no", "off")


def _numba_disabled_by_env():
    return os.environ.get("ORDFACT_DISABLE_NUMBA", "").strip().lower() not in _FALSY


try:
    if _numba_disabled_by_env():
        raise ImportError("disabled by ORDFACT_DISABLE_NUMBA")
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(*args, **kws):
    """``numba.njit`` when available, otherwise the identity decorator."""
    if HAVE_NUMBA:
        kws.setdefault("cache", True)
        kws.setdefault("nogil", True)
        return numba.njit(*args, **kws)
    if len(args) == 1 and callable(args[0]) and not kws:
        return args[0]
    return lambda f: f


def backend_name():
    return "numba" if HAVE_NUMBA else "numpy"
