"""Hot loops: smallest-prime-factor sieve and divisor-sum transforms.

Each kernel exists twice, a numba ``@njit`` version working on int64 arrays
and a numpy version that also accepts ``dtype=object`` arrays of Python ints.
The public wrappers pick one; ``backend="numba"``/``"numpy"`` forces a path
(benchmarks and tests use that to compare the two).

All arrays are indexed by n directly, so slot 0 is unused.
"""

import numpy as np

from ._accel import HAVE_NUMBA, njit
from .errors import SieveOverflowError

INT64_MAX = np.iinfo(np.int64).max

# below this size the JIT compile dominates, numpy is faster end to end
NUMBA_MIN_SIZE = 4096


# -- numba kernels -----------------------------------------------------------

@njit
def _spf_nb(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            if i * i <= limit:
                for m in range(i * i, limit + 1, i):
                    if spf[m] == 0:
                        spf[m] = i
    return spf


@njit
def _recursive_sum_nb(v):
    # v[n] += sum of v[d] over proper divisors d, in increasing n; returns False on overflow
    n = v.shape[0] - 1
    for d in range(1, n // 2 + 1):
        x = v[d]
        if x == 0:
            continue
        for m in range(2 * d, n + 1, d):
            if v[m] > INT64_MAX - x:
                return False
            v[m] += x
    return True


@njit
def _transform_nb(src, out, include_self):
    n = src.shape[0] - 1
    for d in range(1, n + 1):
        x = src[d]
        if x == 0:
            continue
        start = d if include_self else 2 * d
        for m in range(start, n + 1, d):
            if out[m] > INT64_MAX - x:
                return False
            out[m] += x
    return True


# -- numpy kernels -----------------------------------------------------------

def _spf_np(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for i in range(2, int(limit ** 0.5) + 1):
        if spf[i] == 0:
            block = spf[i * i::i]
            block[block == 0] = i
    rest = spf == 0
    rest[0] = False
    spf[rest] = np.nonzero(rest)[0]
    return spf


def _recursive_sum_np(v):
    n = v.shape[0] - 1
    checked = v.dtype != object
    for d in range(1, n // 2 + 1):
        x = v[d]
        if x == 0:
            continue
        block = v[2 * d::d]
        if checked and block.max() > INT64_MAX - x:
            return False
        block += x
    return True


def _transform_np(src, out, include_self):
    n = src.shape[0] - 1
    checked = out.dtype != object
    for d in range(1, n + 1):
        x = src[d]
        if x == 0:
            continue
        block = out[(d if include_self else 2 * d)::d]
        if block.size == 0:
            continue
        if checked and block.max() > INT64_MAX - x:
            return False
        block += x
    return True


# -- dispatch ----------------------------------------------------------------

def _use_numba(arr_or_size, backend):
    if backend == "numpy":
        return False
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable")
        return True
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    if isinstance(arr_or_size, np.ndarray):
        if arr_or_size.dtype == object:
            return False
        arr_or_size = arr_or_size.shape[0]
    return HAVE_NUMBA and arr_or_size >= NUMBA_MIN_SIZE


def spf_array(limit, backend=None):
    """Smallest prime factor of every i <= limit (spf[1] == 1, spf[0] == 0)."""
    if _use_numba(limit + 1, backend):
        return _spf_nb(limit)
    return _spf_np(limit)


def recursive_divisor_sum(seed, backend=None):
    """Return v with v[n] = seed[n] + sum(v[d] for proper divisors d of n).

    ``seed`` is not modified.  int64 input raises SieveOverflowError instead
    of wrapping; object input is exact.
    """
    v = seed.copy()
    if v.dtype == object:
        _recursive_sum_np(v)
        return v
    ok = _recursive_sum_nb(v) if _use_numba(v, backend) else _recursive_sum_np(v)
    if not ok:
        raise SieveOverflowError(f"int64 overflow in recursive divisor sum up to {len(v) - 1}")
    return v


def divisor_transform(src, include_self=False, backend=None):
    """out[n] = sum of src[d] over divisors d of n (proper ones unless include_self)."""
    if src.dtype == object:
        out = np.zeros(src.shape[0], dtype=object)
        _transform_np(src, out, include_self)
        return out
    out = np.zeros(src.shape[0], dtype=np.int64)
    if _use_numba(src, backend):
        ok = _transform_nb(src, out, include_self)
    else:
        ok = _transform_np(src, out, include_self)
    if not ok:
        raise SieveOverflowError(f"int64 overflow in divisor transform up to {len(src) - 1}")
    return out
