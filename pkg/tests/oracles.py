"""Brute-force references, deliberately independent of the package code paths.

Nothing here looks at prime signatures or closed forms: divisors come from
plain enumeration and the counts from literal recursion over integers.
"""

from functools import lru_cache
from itertools import product
from math import comb


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def proper_divisors(n):
    return [d for d in range(1, n) if n % d == 0]


@lru_cache(maxsize=None)
def kappa0(n):
    return 1 + sum(kappa0(d) for d in proper_divisors(n))


@lru_cache(maxsize=None)
def upsilon(n, i):
    if i == 1:
        return 1
    return sum(upsilon(d, i - 1) for d in proper_divisors(n))


@lru_cache(maxsize=None)
def tau(n, i):
    if i == 1:
        return 1
    return sum(tau(d, i - 1) for d in divisors(n))


def ordered_factorizations(n):
    """Every tuple (f1, ..., fm), fj >= 2, with product n; () for n = 1."""
    if n == 1:
        return [()]
    out = []
    for f in range(2, n + 1):
        if n % f == 0:
            out.extend((f,) + rest for rest in ordered_factorizations(n // f))
    return out


def trial_factor(n):
    pairs = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
        p += 1
    if n > 1:
        pairs.append((n, 1))
    return pairs


def fubini(n):
    """Ordered Bell numbers via a(n) = sum_k C(n, k) a(n - k)."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def conjecture_literal(exps):
    """Multi-sum evaluated term by term, in whatever exponent order is given."""
    w = len(exps)
    if w == 0:
        return 1
    total = 0
    for idx in product(*(range(a + 1) for a in exps[:-1])):
        term = 1
        run = 0
        for k in range(w - 1):
            run += idx[k]
            term *= comb(exps[k], idx[k]) * comb(exps[k + 1] + run, exps[k + 1])
        total += term
    return 2 ** exps[-1] * total


def conjecture_symmetric(exps):
    """Symmetric form: sum over all omega indices, no 2**a_w prefactor."""
    total = 0
    for idx in product(*(range(a + 1) for a in exps)):
        term = 1
        run = 0
        for k, a in enumerate(exps):
            term *= comb(a, idx[k]) * comb(a + run, a)
            run += idx[k]
        total += term
    return total
