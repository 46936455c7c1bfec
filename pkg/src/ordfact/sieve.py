"""Divisor-sum sieves over [1, N] and the cross-method verification harness."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import core
from .errors import SieveOverflowError
from .factor import factorize, signature_of, smallest_prime_factor_sieve
from .kernels import divisor_transform, recursive_divisor_sum

METHODS = ("recursive", "theorem1", "theorem2", "conjecture", "macmahon", "sieve")
DTYPES = ("auto", "int64", "object")


@dataclass(frozen=True, eq=False)
class SieveTable:
    """Values of one arithmetic function on 1..limit.

    ``values`` is indexed by n directly (slot 0 is 0); use ``table[n]`` for a
    Python int, ``as_list()`` for the 1..limit run.
    """

    function: str
    limit: int
    values: np.ndarray

    def __getitem__(self, n):
        if not 1 <= n <= self.limit:
            raise IndexError(f"n={n} outside 1..{self.limit}")
        return int(self.values[n])

    def __len__(self):
        return self.limit

    def as_list(self) -> list[int]:
        return [int(v) for v in self.values[1:]]

    def __eq__(self, other):
        if not isinstance(other, SieveTable):
            return NotImplemented
        return (self.function, self.limit) == (other.function, other.limit) and \
            self.as_list() == other.as_list()


def _run(seed_fn, limit, dtype, backend):
    if dtype not in DTYPES:
        raise ValueError(f"dtype must be one of {DTYPES}, got {dtype!r}")
    if dtype in ("auto", "int64"):
        try:
            return recursive_divisor_sum(seed_fn(np.int64), backend=backend)
        except SieveOverflowError:
            if dtype == "int64":
                raise
    return recursive_divisor_sum(seed_fn(object))


def _check_limit(N):
    if N < 1:
        raise ValueError(f"sieve limit must be >= 1, got {N}")


def k_sieve(N: int, dtype: str = "auto", backend=None) -> SieveTable:
    """K(n) for n <= N by forward propagation: seed eps, push each value to its multiples.

    ``dtype="int64"`` is the fixed-width path and raises SieveOverflowError
    instead of wrapping; ``"object"`` is always exact; ``"auto"`` tries int64
    and redoes the run exactly if it overflows.
    """
    _check_limit(N)

    def seed(dt):
        v = np.zeros(N + 1, dtype=dt)
        v[1] = 1
        return v

    return SieveTable("K", N, _run(seed, N, dtype, backend))


def kappa0_sieve(N: int, dtype: str = "auto", backend=None) -> SieveTable:
    _check_limit(N)

    def seed(dt):
        v = np.ones(N + 1, dtype=dt)
        v[0] = 0
        return v

    return SieveTable("kappa0", N, _run(seed, N, dtype, backend))


def upsilon_sieve(N: int, i_max: int, dtype: str = "auto", backend=None) -> list[SieveTable]:
    """[upsilon_1, ..., upsilon_{i_max}] on 1..N, each the proper-divisor sum of the previous."""
    _check_limit(N)
    if i_max < 1:
        raise ValueError(f"i_max must be >= 1, got {i_max}")
    if dtype not in DTYPES:
        raise ValueError(f"dtype must be one of {DTYPES}, got {dtype!r}")
    dt = object if dtype == "object" else np.int64
    cur = np.ones(N + 1, dtype=dt)
    cur[0] = 0
    out = [SieveTable("upsilon_1", N, cur)]
    for i in range(2, i_max + 1):
        try:
            cur = divisor_transform(cur, backend=backend)
        except SieveOverflowError:
            if dtype == "int64":
                raise
            return upsilon_sieve(N, i_max, dtype="object")
        out.append(SieveTable(f"upsilon_{i}", N, cur))
    return out


# -- verification ------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    n: int
    method: str
    got: int
    expected: int


@dataclass
class VerifyReport:
    limit: int
    methods: tuple[str, ...]
    mismatches: list[Mismatch] = field(default_factory=list)
    identities: tuple[str, ...] = ()
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def first_mismatch(self) -> Mismatch | None:
        return self.mismatches[0] if self.mismatches else None

    def summary_lines(self) -> list[str]:
        """Scheduling-independent text summary (no timings)."""
        lines = [
            f"range 1..{self.limit}",
            "methods " + ",".join(self.methods),
            "identities " + (",".join(self.identities) or "-"),
            f"mismatches {len(self.mismatches)}",
        ]
        for m in self.mismatches[:20]:
            lines.append(f"mismatch n={m.n} method={m.method} got={m.got} expected={m.expected}")
        lines.append("OK" if self.ok else "FAIL")
        return lines


def _kappa0_by_method(method, exps):
    if method == "recursive":
        return core.kappa0_recursive_signature(exps)
    if method == "theorem1":
        return core.kappa0_theorem1(exps)
    if method == "theorem2":
        return core.kappa0_theorem2(exps)
    if method == "conjecture":
        return core.kappa0_conjecture(exps)
    if method == "macmahon":
        return 2 * core.k_macmahon(exps) if exps else 1
    raise ValueError(f"unknown method {method!r}")


def _check_block(args):
    lo, sigs, kappa0_vals, k_vals, methods = args
    bad = []
    for off, exps in enumerate(sigs):
        n = lo + off
        expected = kappa0_vals[off]
        for m in methods:
            got = _kappa0_by_method(m, exps)
            if got != expected:
                bad.append(Mismatch(n, m, got, expected))
        if "recursive" in methods:
            got_k = core.k_recursive_signature(exps)
            if got_k != k_vals[off]:
                bad.append(Mismatch(n, "recursive:K", got_k, k_vals[off]))
        if "macmahon" in methods and n >= 2:
            got_k = core.k_macmahon(exps)
            if got_k != k_vals[off]:
                bad.append(Mismatch(n, "macmahon:K", got_k, k_vals[off]))
    return bad


def _blocks(N, jobs):
    size = max(1, -(-N // (4 * jobs)))
    return [(lo, min(N, lo + size - 1)) for lo in range(1, N + 1, size)]


def _as_kernel_array(values):
    arr = np.array(values, dtype=object)
    try:
        return arr.astype(np.int64)
    except OverflowError:
        return arr


def _identity_mismatches(N, sigs, kappa0, k):
    bad = []
    # kappa0 = 2K for n >= 2
    for n in range(2, N + 1):
        if kappa0[n] != 2 * k[n]:
            bad.append(Mismatch(n, "identity:kappa0=2K", kappa0[n], 2 * k[n]))
    # kappa0 = sum_{d|n} K(d)
    conv = divisor_transform(_as_kernel_array(k), include_self=True).tolist()
    for n in range(1, N + 1):
        if conv[n] != kappa0[n]:
            bad.append(Mismatch(n, "identity:kappa0=1*K", conv[n], kappa0[n]))
    # 2**alpha* | kappa0
    for n in range(2, N + 1):
        a = sigs[n - 1][0] if sigs[n - 1] else 0
        if kappa0[n] % (1 << a):
            bad.append(Mismatch(n, "identity:2^alpha*|kappa0", kappa0[n] % (1 << a), 0))
    top = max(sum(s) for s in sigs) + 1
    ups = [t.values.tolist() for t in upsilon_sieve(N, top)]
    for n in range(1, N + 1):
        big_omega = sum(sigs[n - 1])
        total = sum(ups[i][n] for i in range(big_omega + 1))
        if total != kappa0[n]:
            bad.append(Mismatch(n, "identity:sum_upsilon=kappa0", total, kappa0[n]))
    return bad


def verify_range(N: int, methods=METHODS, jobs: int = 1, identities: bool = True) -> VerifyReport:
    """Compare the selected evaluators with the sieve baseline on 1..N.

    Every method's kappa0 value is compared with ``kappa0_sieve``; the
    recursive and MacMahon routes are also compared on K itself.  With
    ``identities`` the kappa0/K cross-identities are checked over the range
    too.  Mismatches never abort; they are collected in ascending n.
    """
    _check_limit(N)
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    methods = tuple(m for m in METHODS if m in set(methods))
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    t0 = time.perf_counter()

    kappa0 = kappa0_sieve(N).values.tolist()
    k = k_sieve(N).values.tolist()
    spf = smallest_prime_factor_sieve(max(N, 2))
    sigs = [signature_of(factorize(n, spf)).exponents for n in range(1, N + 1)]

    per_n = tuple(m for m in methods if m != "sieve")
    blocks = [
        (lo, sigs[lo - 1:hi], kappa0[lo:hi + 1], k[lo:hi + 1], per_n)
        for lo, hi in _blocks(N, jobs)
    ]
    if jobs == 1:
        results = [_check_block(b) for b in blocks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_block, blocks))
    bad = [m for r in results for m in r]
    if "sieve" in methods:
        for n in range(2, N + 1):
            if kappa0[n] != 2 * k[n]:
                bad.append(Mismatch(n, "sieve", 2 * k[n], kappa0[n]))

    idents: tuple[str, ...] = ()
    if identities:
        idents = ("kappa0=2K", "kappa0=1*K", "2^alpha*|kappa0", "sum_upsilon=kappa0")
        bad.extend(_identity_mismatches(N, sigs, kappa0, k))

    bad.sort(key=lambda m: (m.n, m.method))
    return VerifyReport(N, methods, bad, idents, time.perf_counter() - t0)
