"""Time the numba and numpy kernel paths against each other.

    python benchmarks/bench_kernels.py --limit 1000000 --repeat 3

The numba column excludes JIT compilation (one warm-up call per kernel).
Both paths are checked for identical output before timing is reported.
"""

import argparse
import time

import numpy as np

from ordfact import kernels
from ordfact._accel import HAVE_NUMBA


def _k_seed(N, dtype=np.int64):
    v = np.zeros(N + 1, dtype=dtype)
    v[1] = 1
    return v


def _kappa0_seed(N, dtype=np.int64):
    v = np.ones(N + 1, dtype=dtype)
    v[0] = 0
    return v


CASES = {
    "spf": lambda N, b: kernels.spf_array(N, backend=b),
    "K sieve": lambda N, b: kernels.recursive_divisor_sum(_k_seed(N), backend=b),
    "kappa0 sieve": lambda N, b: kernels.recursive_divisor_sum(_kappa0_seed(N), backend=b),
    "upsilon_2": lambda N, b: kernels.divisor_transform(_kappa0_seed(N), backend=b),
    "1*K": lambda N, b: kernels.divisor_transform(
        kernels.recursive_divisor_sum(_k_seed(N), backend=b), include_self=True, backend=b),
}


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=10**6)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--exact", action="store_true",
                    help="also time the object-dtype (Python int) path")
    args = ap.parse_args()
    N = args.limit

    print(f"N = {N}, best of {args.repeat}")
    print(f"{'kernel':<14}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for name, fn in CASES.items():
        t_np, r_np = best_of(lambda: fn(N, "numpy"), args.repeat)
        if HAVE_NUMBA:
            fn(64, "numba")
            t_nb, r_nb = best_of(lambda: fn(N, "numba"), args.repeat)
            if not np.array_equal(r_np, r_nb):
                raise SystemExit(f"{name}: backends disagree")
            print(f"{name:<14}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x")
        else:
            print(f"{name:<14}{t_np:>12.4f}{'n/a':>12}{'':>10}")

    if args.exact:
        t_obj, r_obj = best_of(lambda: kernels.recursive_divisor_sum(_k_seed(N, object)), 1)
        ref = kernels.recursive_divisor_sum(_k_seed(N), backend="numpy")
        assert r_obj.tolist() == ref.tolist()
        print(f"{'K sieve exact':<14}{t_obj:>12.4f}")


if __name__ == "__main__":
    main()
