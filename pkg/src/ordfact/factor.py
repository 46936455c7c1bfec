"""Prime factorizations, prime signatures and the smallest-prime-factor table."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, prod

import numpy as np

from .kernels import spf_array

TRIAL_DIVISION_MAX = 2**64 - 1


@dataclass(frozen=True)
class PrimeFactorization:
    """(prime, exponent) pairs in ascending prime order; 1 is the empty list."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(p), int(e)) for p, e in self.pairs))
        last = 1
        for p, e in self.pairs:
            if p <= last or e < 1:
                raise ValueError(f"invalid factorization {self.pairs}")
            last = p

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class Signature:
    """Prime signature in canonical (non-increasing) order.

    Construct from any iterable of positive exponents; they are sorted on the
    way in, so ``Signature((1, 2)) == Signature((2, 1))``.
    """

    exponents: tuple[int, ...] = ()

    def __post_init__(self):
        exps = tuple(sorted((int(a) for a in self.exponents), reverse=True))
        if exps and exps[-1] < 1:
            raise ValueError(f"signature exponents must be >= 1, got {self.exponents}")
        object.__setattr__(self, "exponents", exps)

    @property
    def omega(self) -> int:
        return len(self.exponents)

    @property
    def big_omega(self) -> int:
        return sum(self.exponents)

    @property
    def alpha_star(self) -> int:
        return self.exponents[0] if self.exponents else 0

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __str__(self):
        return "(" + ",".join(map(str, self.exponents)) + ")"


def as_signature(s) -> Signature:
    return s if isinstance(s, Signature) else Signature(tuple(s))


@dataclass(frozen=True, eq=False)
class SpfTable:
    limit: int
    spf: np.ndarray

    def __getitem__(self, i):
        return int(self.spf[i])


def smallest_prime_factor_sieve(limit: int, backend=None) -> SpfTable:
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    spf = spf_array(int(limit), backend=backend)
    spf.setflags(write=False)
    return SpfTable(int(limit), spf)


def _trial_division(n):
    pairs = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
    # 6k +- 1 wheel
    p, step = 5, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        pairs.append((n, 1))
    return pairs


def factorize(n: int, table: SpfTable | None = None) -> PrimeFactorization:
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    if table is None:
        if n > TRIAL_DIVISION_MAX:
            raise ValueError(
                f"{n} exceeds the trial-division cap 2**64-1; pass a factorization or signature"
            )
        return PrimeFactorization(tuple(_trial_division(n)))
    if n > table.limit:
        raise ValueError(f"{n} is beyond the sieve limit {table.limit}")
    spf = table.spf
    pairs = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        pairs.append((p, e))
    return PrimeFactorization(tuple(pairs))


def signature_of(f: PrimeFactorization) -> Signature:
    return Signature(tuple(e for _, e in f.pairs))


def signature(n: int, table: SpfTable | None = None) -> Signature:
    """Shorthand for ``signature_of(factorize(n, table))``."""
    return signature_of(factorize(n, table))


def first_primes(k: int) -> list[int]:
    primes: list[int] = []
    c = 2
    while len(primes) < k:
        if all(c % p for p in primes if p <= isqrt(c)):
            primes.append(c)
        c += 1
    return primes


def n_from_signature(s) -> int:
    """Least integer with signature ``s``: largest exponents on the smallest primes."""
    s = as_signature(s)
    return prod(p**a for p, a in zip(first_primes(s.omega), s.exponents))
