from itertools import permutations
from math import isqrt

import pytest
from hypothesis import given, settings, strategies as st

from ordfact import core
from ordfact.core import (
    Classification,
    classify_recursive,
    k_macmahon,
    k_recursive,
    kappa0_conjecture,
    kappa0_recursive,
    kappa0_squarefree,
    kappa0_theorem1,
    kappa0_theorem2,
    kappa_x_recursive,
    tau,
    upsilon_recursive,
    upsilon_via_tau,
)
from ordfact.factor import Signature, factorize, signature_of, smallest_prime_factor_sieve
from ordfact.sieve import kappa0_sieve

import oracles
from conftest import TABLE1

SPF = smallest_prime_factor_sieve(10**5)


def sig(n):
    return signature_of(factorize(n, SPF))


# -- worked values -------------------------------------------------------------

@pytest.mark.parametrize("n, expected", [(8, 4), (1, 1), (12, 8), (36, 26)])
def test_k_recursive(n, expected):
    assert k_recursive(n) == expected


@pytest.mark.parametrize("n, expected", [(8, 8), (36, 52), (12, 16), (1, 1)])
def test_kappa0_recursive(n, expected):
    assert kappa0_recursive(n) == expected


def test_n_zero_is_rejected():
    for f in (k_recursive, kappa0_recursive):
        with pytest.raises(ValueError):
            f(0)


@pytest.mark.parametrize("exps, expected", [((), 1), ((1,), 2), ((2, 2), 52), ((2, 1), 16)])
def test_theorem1(exps, expected):
    assert kappa0_theorem1(exps) == expected


@pytest.mark.parametrize("exps, expected", [((2, 1), 16), ((), 1), ((1,) * 5, 1082)])
def test_theorem2(exps, expected):
    assert kappa0_theorem2(exps) == expected


@pytest.mark.parametrize("exps, expected", [((3,), 8), ((2, 1), 16), ((), 1), ((7,), 128)])
def test_conjecture(exps, expected):
    assert kappa0_conjecture(exps) == expected


@pytest.mark.parametrize("exps, expected", [((2, 1), 8), ((1,), 1), ((3,), 4), ((), 1)])
def test_macmahon(exps, expected):
    assert k_macmahon(exps) == expected


@pytest.mark.parametrize("i, expected", [(1, 1), (2, 6), (3, 18), (4, 40)])
def test_tau_at_12(i, expected):
    assert tau((2, 1), i) == expected


def test_tau_table1():
    for i in range(1, 5):
        assert [tau(sig(n), i) for n in range(1, 13)] == TABLE1[f"tau{i}"]


def test_index_errors():
    for f in (tau, upsilon_via_tau):
        with pytest.raises(ValueError):
            f((1,), 0)
    with pytest.raises(ValueError):
        upsilon_recursive(5, 0)
    with pytest.raises(ValueError):
        kappa_x_recursive(5, -1)
    with pytest.raises(ValueError):
        kappa0_squarefree(-1)


@pytest.mark.parametrize("n, i, expected", [(12, 3, 7), (36, 5, 6), (97, 1, 1), (1, 1, 1)])
def test_upsilon_recursive(n, i, expected):
    assert upsilon_recursive(n, i) == expected


@pytest.mark.parametrize("exps, i, expected", [((2, 1), 2, 5), ((3,), 4, 1), ((), 2, 0), ((), 1, 1)])
def test_upsilon_via_tau(exps, i, expected):
    assert upsilon_via_tau(exps, i) == expected


def test_upsilon_table1():
    for i in range(1, 5):
        assert [upsilon_recursive(n, i) for n in range(1, 13)] == TABLE1[f"upsilon{i}"]
        assert [upsilon_via_tau(sig(n), i) for n in range(1, 13)] == TABLE1[f"upsilon{i}"]


@pytest.mark.parametrize("n, x, expected", [(8, 0, 8), (1, 0, 1), (1, 5, 1), (4, 1, 8)])
def test_kappa_x(n, x, expected):
    assert kappa_x_recursive(n, x) == expected


def test_kappa_x_against_integer_recursion():
    def ref(n, x, memo={}):
        if (n, x) not in memo:
            memo[n, x] = n**x + sum(ref(d, x) for d in oracles.proper_divisors(n))
        return memo[n, x]

    for x in (1, 2, 3):
        for n in range(1, 301):
            assert kappa_x_recursive(n, x) == ref(n, x)


def test_kappa_x_not_signature_only():
    # 12 = 2^2*3 and 18 = 2*3^2 share a signature but not kappa_1
    assert kappa_x_recursive(12, 0) == kappa_x_recursive(18, 0)
    assert kappa_x_recursive(12, 1) != kappa_x_recursive(18, 1)


@pytest.mark.parametrize("omega, expected", [(0, 1), (1, 2), (2, 6), (3, 26), (4, 150), (5, 1082)])
def test_squarefree(omega, expected):
    assert kappa0_squarefree(omega) == expected


def test_squarefree_matches_fubini_and_theorem2():
    # kappa0 of a squarefree number is twice the ordered Bell number
    for w in range(1, 31):
        assert kappa0_squarefree(w) == 2 * oracles.fubini(w)
        assert kappa0_squarefree(w) == kappa0_theorem2((1,) * w)


@pytest.mark.parametrize("n, cls", [
    (8, Classification.PERFECT),
    (12, Classification.ABUNDANT),
    (3, Classification.DEFICIENT),
    (1, Classification.PERFECT),
])
def test_classify(n, cls):
    assert classify_recursive(n) is cls
    assert str(cls) == cls.value


# -- invariants ----------------------------------------------------------------

def test_kappa0_twice_k():
    assert kappa0_recursive(1) == k_recursive(1) == 1
    for n in range(2, 10**5 + 1):
        assert kappa0_recursive(n, SPF) == 2 * k_recursive(n, SPF)


def test_kappa0_is_divisor_sum_of_k():
    N = 10**4
    k = [0] + [k_recursive(n, SPF) for n in range(1, N + 1)]
    conv = [0] * (N + 1)
    for d in range(1, N + 1):
        for m in range(d, N + 1, d):
            conv[m] += k[d]
    for n in range(1, N + 1):
        assert conv[n] == kappa0_recursive(n, SPF)


def test_closed_forms_agree_on_all_signatures_to_1e5():
    sigs = {sig(n) for n in range(1, 10**5 + 1)}
    for s in sigs:
        v = core.kappa0_recursive_signature(s)
        assert kappa0_theorem1(s) == v
        assert kappa0_theorem2(s) == v
        assert kappa0_conjecture(s) == v
        if s.omega:
            assert 2 * k_macmahon(s) == v


def test_generations_sum_to_kappa0():
    for n in range(1, 10**4 + 1):
        s = sig(n)
        total = sum(upsilon_recursive(n, i + 1, SPF) for i in range(s.big_omega + 1))
        assert total == kappa0_recursive(n, SPF)
        # nothing beyond generation Omega
        assert upsilon_recursive(n, s.big_omega + 2, SPF) == 0


def test_upsilon_routes_agree():
    for n in range(1, 10**4 + 1):
        s = sig(n)
        for i in range(1, s.big_omega + 2):
            assert upsilon_recursive(n, i, SPF) == upsilon_via_tau(s, i)


def test_upsilon_small_n_against_integer_recursion():
    for n in range(1, 400):
        for i in range(1, 6):
            assert upsilon_recursive(n, i) == oracles.upsilon(n, i)
            assert tau(sig(n), i) == oracles.tau(n, i)


def test_tau2_is_divisor_count():
    for n in range(1, 10**4 + 1):
        count = sum(2 - (d * d == n) for d in range(1, isqrt(n) + 1) if n % d == 0)
        assert tau(sig(n), 2) == count


def test_two_to_alpha_star_divides_kappa0():
    for n in range(2, 10**5 + 1):
        s = sig(n)
        assert kappa0_recursive(n, SPF) % 2**s.alpha_star == 0


def test_kappa0_depends_only_on_signature():
    # sieve values are computed per n, not per signature
    vals = kappa0_sieve(10**5).as_list()
    seen = {}
    for n in range(1, 10**5 + 1):
        s = sig(n)
        assert seen.setdefault(s, vals[n - 1]) == vals[n - 1]


def test_upsilon_convolution_surrogate():
    N = 2000
    for n in range(2, N + 1):
        s = sig(n)
        divs = oracles.divisors(n)
        for i in range(2, s.big_omega + 2):
            lhs = upsilon_recursive(n, i) + upsilon_recursive(n, i - 1)
            assert lhs == sum(upsilon_recursive(d, i - 1) for d in divs)


def test_kappa_x_zero_is_kappa0():
    for n in range(1, 10**4 + 1):
        assert kappa_x_recursive(n, 0, SPF) == kappa0_recursive(n, SPF)


def test_k_against_tuple_enumeration():
    for n in range(1, 1001):
        assert k_recursive(n) == len(oracles.ordered_factorizations(n))


def test_kappa0_against_integer_recursion():
    for n in range(1, 2001):
        assert kappa0_recursive(n) == oracles.kappa0(n)


def test_cache_clear_keeps_values():
    before = kappa0_theorem2((4, 3, 1))
    core.cache_clear()
    assert kappa0_theorem2((4, 3, 1)) == before


# -- properties over random signatures ---------------------------------------

signatures = st.lists(st.integers(1, 9), min_size=0, max_size=6).map(Signature)
small_sigs = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(Signature)


@settings(max_examples=150, deadline=None)
@given(signatures)
def test_closed_forms_agree(s):
    v = kappa0_theorem2(s)
    assert kappa0_theorem1(s) == v
    assert kappa0_conjecture(s) == v
    if s.omega:
        assert 2 * k_macmahon(s) == v
    assert v % 2**s.alpha_star == 0


@settings(max_examples=100, deadline=None)
@given(small_sigs)
def test_conjecture_matches_literal_sum_in_any_order(s):
    v = kappa0_conjecture(s)
    assert oracles.conjecture_symmetric(s.exponents) == v
    for order in set(permutations(s.exponents)):
        assert oracles.conjecture_literal(order) == v


@settings(max_examples=60, deadline=None)
@given(small_sigs)
def test_recursion_matches_theorem2(s):
    assert core.kappa0_recursive_signature(s) == kappa0_theorem2(s)
    assert core.k_recursive_signature(s) == k_macmahon(s)


@settings(max_examples=100, deadline=None)
@given(signatures, st.integers(1, 12))
def test_generation_sum(s, extra):
    total = sum(upsilon_via_tau(s, i + 1) for i in range(s.big_omega + 1))
    assert total == kappa0_theorem2(s)
    assert upsilon_via_tau(s, s.big_omega + 1 + extra) == 0
