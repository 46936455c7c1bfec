"""Sequence records (champions) of K and kappa0, and recursively perfect numbers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core
from .factor import first_primes
from .sieve import k_sieve, kappa0_sieve

FUNCTIONS = ("K", "kappa0")


@dataclass(frozen=True)
class RecordTable:
    function: str
    entries: tuple[tuple[int, int], ...]

    @property
    def indices(self) -> list[int]:
        return [n for n, _ in self.entries]

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    def lines(self) -> list[str]:
        return [f"{n} {v}" for n, v in self.entries]


def _check_which(which):
    if which not in FUNCTIONS:
        raise ValueError(f"function must be one of {FUNCTIONS}, got {which!r}")


def records_of(pairs) -> list[tuple[int, int]]:
    """Strict running-maximum breaks of (n, value) pairs taken in ascending n."""
    out = []
    best = None
    for n, v in pairs:
        if best is None or v > best:
            out.append((n, v))
            best = v
    return out


def champions_sieve(N: int, which: str = "kappa0") -> RecordTable:
    _check_which(which)
    table = k_sieve(N) if which == "K" else kappa0_sieve(N)
    vals = table.values[1:]
    if vals.dtype == object:
        entries = records_of(enumerate(vals.tolist(), start=1))
    else:
        # strict record at i iff vals[i] exceeds the running max of vals[:i]
        prev_max = np.maximum.accumulate(vals)
        is_rec = np.empty(vals.shape[0], dtype=bool)
        is_rec[0] = True
        is_rec[1:] = vals[1:] > prev_max[:-1]
        idx = np.nonzero(is_rec)[0]
        entries = [(int(i) + 1, int(vals[i])) for i in idx]
    return RecordTable(which, tuple(entries))


def minimal_signature_candidates(n_bound: int):
    """Yield (n, exponents) for every n <= n_bound whose exponents are
    non-increasing on consecutive primes 2, 3, 5, ...; includes (1, ())."""
    if n_bound < 1:
        return
    # a signature longer than len(primes) already overshoots the bound
    primes: list[int] = []
    primorial = 1
    while primorial <= n_bound:
        primes = first_primes(len(primes) + 1)
        primorial *= primes[-1]

    stack = [(1, (), 0, None)]
    while stack:
        n, exps, pos, cap = stack.pop()
        yield n, exps
        if pos >= len(primes):
            continue
        p = primes[pos]
        m = n * p
        a = 1
        while m <= n_bound and (cap is None or a <= cap):
            stack.append((m, exps + (a,), pos + 1, a))
            m *= p
            a += 1


def _kappa0_checked(exps):
    v = core.kappa0_conjecture(exps)
    w = core.kappa0_theorem2(exps)
    if v != w:
        raise ArithmeticError(f"conjecture {v} != theorem2 {w} for signature {exps}")
    return v


def champions_signature_search(n_bound: int, which: str = "kappa0") -> RecordTable:
    """Records among minimal representatives of each signature up to n_bound.

    Values come from the multi-sum and are cross-checked against the
    inclusion-exclusion sum.  A record index is always the least integer of
    its signature, so this sees every record without touching other n.
    """
    _check_which(which)
    if n_bound < 1:
        raise ValueError(f"n_bound must be >= 1, got {n_bound}")
    cands = sorted(minimal_signature_candidates(n_bound))
    pairs = []
    for n, exps in cands:
        v = _kappa0_checked(exps)
        if which == "K":
            v = 1 if n == 1 else v // 2
        pairs.append((n, v))
    return RecordTable(which, tuple(records_of(pairs)))


def recursively_perfect(N: int) -> list[int]:
    """All n <= N with kappa0(n) == n."""
    vals = kappa0_sieve(N).values
    ns = np.arange(N + 1, dtype=np.int64)
    hit = vals[1:] == ns[1:]
    return [int(i) + 1 for i in np.nonzero(hit)[0]]
