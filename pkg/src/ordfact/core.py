"""Evaluators for K, kappa_0, kappa_x, tau_i and upsilon_i.

There is one function per route: the defining recursions, the hypergeometric
series, the inclusion-exclusion double sum, the conjectured multi-sum, and
MacMahon's double sum for K.  Everything is exact integer (or rational)
arithmetic; nothing here touches floating point.

Signature-only functions are memoized on the canonical exponent tuple.
kappa_x for x > 0 depends on the primes themselves, so it is memoized on
``(n, x)`` instead.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from .factor import SpfTable, Signature, as_signature, factorize, signature_of

_HALF = Fraction(1, 2)
_THREE_QUARTERS = Fraction(3, 4)


def epsilon(n: int) -> int:
    """floor(1/n): 1 at n = 1, else 0."""
    return 1 if n == 1 else 0


def _exps(s) -> tuple[int, ...]:
    return as_signature(s).exponents


def _check_n(n):
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def _check_index(i, name="i"):
    if i < 1:
        raise ValueError(f"{name} must be >= 1, got {i}")


# -- defining recursions -----------------------------------------------------

@lru_cache(maxsize=None)
def _proper_children(exps: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Canonical signatures of the proper divisors, with multiplicities."""
    counts: Counter = Counter()
    for beta in itertools.product(*(range(a + 1) for a in exps)):
        if beta == exps:
            continue
        counts[tuple(sorted((b for b in beta if b), reverse=True))] += 1
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def _k_rec(exps):
    return (0 if exps else 1) + sum(c * _k_rec(ch) for ch, c in _proper_children(exps))


@lru_cache(maxsize=None)
def _kappa0_rec(exps):
    return 1 + sum(c * _kappa0_rec(ch) for ch, c in _proper_children(exps))


@lru_cache(maxsize=None)
def _upsilon_rec(exps, i):
    if i == 1:
        return 1
    return sum(c * _upsilon_rec(ch, i - 1) for ch, c in _proper_children(exps))


def k_recursive(n: int, table: SpfTable | None = None) -> int:
    """Number of ordered factorizations K(n), from K(n) = eps + sum over proper divisors."""
    _check_n(n)
    return _k_rec(signature_of(factorize(n, table)).exponents)


def kappa0_recursive(n: int, table: SpfTable | None = None) -> int:
    """Number of recursive divisors, kappa0(n) = 1 + sum over proper divisors."""
    _check_n(n)
    return _kappa0_rec(signature_of(factorize(n, table)).exponents)


def k_recursive_signature(s) -> int:
    return _k_rec(_exps(s))


def kappa0_recursive_signature(s) -> int:
    return _kappa0_rec(_exps(s))


def upsilon_recursive(n: int, i: int, table: SpfTable | None = None) -> int:
    """Squares in generation i-1 of the divisor tree (proper-divisor iterate)."""
    _check_n(n)
    _check_index(i)
    return _upsilon_rec(signature_of(factorize(n, table)).exponents, i)


_KAPPA_X_CACHE: dict[tuple[int, int], int] = {}


def _kappa_x(primes, exps, x):
    n = prod(p**e for p, e in zip(primes, exps))
    key = (n, x)
    hit = _KAPPA_X_CACHE.get(key)
    if hit is not None:
        return hit
    total = n**x
    for beta in itertools.product(*(range(e + 1) for e in exps)):
        if beta != exps:
            total += _kappa_x(primes, beta, x)
    _KAPPA_X_CACHE[key] = total
    return total


def kappa_x_recursive(n: int, x: int, table: SpfTable | None = None) -> int:
    """kappa_x(n) = n**x + sum of kappa_x over proper divisors."""
    _check_n(n)
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    f = factorize(n, table)
    primes = tuple(p for p, _ in f.pairs)
    exps = tuple(e for _, e in f.pairs)
    return _kappa_x(primes, exps, int(x))


# -- closed forms ------------------------------------------------------------

def _certified_series(first_term: Fraction, ratio) -> int:
    """Sum a positive series known to converge to an integer.

    ``ratio(i)`` gives t_{i+1}/t_i and must be non-increasing in i.  Once
    ratio(i) <= 3/4 the tail after t_i is at most 3*t_i; when that is below
    1/2 the partial sum S satisfies V - 1/2 < S <= V and rounds exactly.
    """
    total = Fraction(0)
    term = first_term
    i = 0
    while True:
        total += term
        r = ratio(i)
        if r <= _THREE_QUARTERS and 3 * term < _HALF:
            return (total + _HALF).__floor__()
        term *= r
        i += 1


@lru_cache(maxsize=None)
def _theorem1(exps):
    w = len(exps)

    def ratio(i):
        return Fraction(prod(a + i + 1 for a in exps), 2 * (i + 1) ** w)

    return _certified_series(_HALF, ratio)


def kappa0_theorem1(s) -> int:
    """kappa0 from (1/2) sum_i 2**-i prod_k C(a_k + i, a_k), summed to a certified tail."""
    return _theorem1(_exps(s))


_COLUMNS: dict[int, list[int]] = {}


def _column(a, upto):
    """[C(a + s, a) for s in 0..upto] from a per-``a`` cache grown on demand."""
    col = _COLUMNS.get(a)
    if col is None:
        col = _COLUMNS[a] = [1]
    while len(col) <= upto:
        s = len(col)
        col.append(col[-1] * (a + s) // s)
    return col


def _binom_products(exps, upto):
    """[prod_k C(a_k + j, a_k) for j in 0..upto]."""
    cols = [(_column(a, upto), m) for a, m in Counter(exps).items()]
    return [prod(col[j] ** m for col, m in cols) for j in range(upto + 1)]


@lru_cache(maxsize=None)
def _theorem2_coeffs(big_omega):
    # collect the double sum by j: c_j = sum_{i=j}^{Omega} (-1)**(i-j) C(i, j)
    return tuple(
        sum(-comb(i, j) if (i - j) & 1 else comb(i, j) for i in range(j, big_omega + 1))
        for j in range(big_omega + 1)
    )


@lru_cache(maxsize=None)
def _theorem2(exps):
    big_omega = sum(exps)
    t = _binom_products(exps, big_omega)
    return sum(c * tj for c, tj in zip(_theorem2_coeffs(big_omega), t))


def kappa0_theorem2(s) -> int:
    """kappa0 from the finite inclusion-exclusion double sum over i <= Omega."""
    return _theorem2(_exps(s))


@lru_cache(maxsize=None)
def _conjecture(exps):
    w = len(exps)
    if w == 0:
        return 1
    # the inner products only see prefix sums i_1 + ... + i_k, so carry a
    # weight per prefix sum instead of expanding every index tuple
    weights = [1]
    reach = 0
    for k in range(w - 1):
        a, nxt = exps[k], exps[k + 1]
        choose_a = [comb(a, i) for i in range(a + 1)]
        reach += a
        grow = _column(nxt, reach)
        acc = [0] * (reach + 1)
        for s, wt in enumerate(weights):
            if wt:
                for i, c in enumerate(choose_a):
                    acc[s + i] += wt * c
        weights = [wt * g for wt, g in zip(acc, grow)]
    return 2 ** exps[-1] * sum(weights)


def kappa0_conjecture(s) -> int:
    """kappa0 from the conjectured multi-sum, 2**a_w * sum prod C(a_k,i_k) C(a_{k+1}+i_1+..+i_k, a_{k+1}).

    Exponents are taken in canonical non-increasing order.  The empty
    signature gives 1 (empty product).
    """
    return _conjecture(_exps(s))


@lru_cache(maxsize=None)
def _macmahon_coeffs(big_omega):
    # collect by m = i - j - 1: c_m = sum_{i=m+1}^{Omega} (-1)**(i-m-1) C(i, i-m-1)
    return tuple(
        sum(-comb(i, i - m - 1) if (i - m - 1) & 1 else comb(i, i - m - 1)
            for i in range(m + 1, big_omega + 1))
        for m in range(big_omega)
    )


@lru_cache(maxsize=None)
def _macmahon(exps):
    if not exps:
        return 1
    big_omega = sum(exps)
    t = _binom_products(exps, big_omega - 1)
    return sum(c * tm for c, tm in zip(_macmahon_coeffs(big_omega), t))


def k_macmahon(s) -> int:
    """K from MacMahon's double sum.  The empty signature (n = 1) returns K(1) = 1."""
    return _macmahon(_exps(s))


def tau(s, i: int) -> int:
    """i-fold divisor-count iterate, prod_k C(a_k + i - 1, i - 1); tau_2 is d(n)."""
    _check_index(i)
    return prod(comb(a + i - 1, i - 1) for a in _exps(s))


def upsilon_via_tau(s, i: int) -> int:
    """upsilon_i = sum_j (-1)**(i-1-j) C(i-1, j) tau_{j+1}."""
    _check_index(i)
    exps = _exps(s)
    total = 0
    for j in range(i):
        term = comb(i - 1, j) * tau(exps, j + 1)
        total += -term if (i - 1 - j) & 1 else term
    return total


def kappa0_squarefree(omega: int) -> int:
    """kappa0 of a product of omega distinct primes, Li_{-omega}(1/2) = sum_i i**omega / 2**i."""
    if omega < 0:
        raise ValueError(f"omega must be non-negative, got {omega}")

    def ratio(k):
        # term index k corresponds to i = k + 1
        return Fraction((k + 2) ** omega, 2 * (k + 1) ** omega)

    return _certified_series(_HALF, ratio)


class Classification(str, enum.Enum):
    PERFECT = "perfect"
    ABUNDANT = "abundant"
    DEFICIENT = "deficient"

    def __str__(self):
        return self.value


def classify_recursive(n: int, table: SpfTable | None = None) -> Classification:
    v = kappa0_recursive(n, table)
    if v == n:
        return Classification.PERFECT
    return Classification.ABUNDANT if v > n else Classification.DEFICIENT


def kappa0_over_2_alpha(n: int, table: SpfTable | None = None) -> int:
    """kappa0(n) / 2**alpha*(n); the division is always exact."""
    sig = signature_of(factorize(n, table))
    q, r = divmod(_theorem2(sig.exponents), 2**sig.alpha_star)
    if r:
        raise ArithmeticError(f"2**{sig.alpha_star} does not divide kappa0({n})")
    return q


def cache_clear():
    for f in (_proper_children, _k_rec, _kappa0_rec, _upsilon_rec, _theorem1,
              _theorem2, _theorem2_coeffs, _conjecture, _macmahon, _macmahon_coeffs):
        f.cache_clear()
    _KAPPA_X_CACHE.clear()
    _COLUMNS.clear()


__all__ = [
    "Classification", "Signature", "cache_clear", "classify_recursive", "epsilon",
    "k_macmahon", "k_recursive", "k_recursive_signature", "kappa0_conjecture",
    "kappa0_over_2_alpha", "kappa0_recursive", "kappa0_recursive_signature",
    "kappa0_squarefree", "kappa0_theorem1", "kappa0_theorem2", "kappa_x_recursive",
    "tau", "upsilon_recursive", "upsilon_via_tau",
]
