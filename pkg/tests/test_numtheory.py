from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from icgraph.numtheory import (
    euler_phi,
    factorize,
    moebius,
    p_adic_valuation,
    proper_divisors,
    ramanujan,
    t_index,
)
from oracles import mobius_sieve, unit_cosine_sum


@pytest.mark.parametrize("n,factors", [(12, ((2, 2), (3, 1))), (1, ()), (60, ((2, 2), (3, 1), (5, 1)))])
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


@given(st.integers(1, 10**6))
def test_factorization_invariants(n):
    f = factorize(n)
    prod = 1
    for p, a in f.factors:
        assert a >= 1
        prod *= p**a
    assert prod == n
    assert list(f.primes) == sorted(set(f.primes))


@pytest.mark.parametrize("fn", [factorize, euler_phi, moebius])
def test_rejects_zero(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(12) == sum(1 for k in range(1, 13) if gcd(k, 12) == 1) == 4
    assert euler_phi(6) == 2


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(12) == 0
    assert moebius(6) == 1


def test_phi_matches_direct_count_to_10k():
    for n in range(1, 10_001):
        count = int(np.count_nonzero(np.gcd(np.arange(1, n + 1), n) == 1))
        assert euler_phi(n) == count, n


def test_moebius_matches_sieve_to_10k():
    mu = mobius_sieve(10_000)
    assert all(moebius(n) == mu[n] for n in range(1, 10_001))


def test_proper_divisors():
    assert proper_divisors(6) == [1, 2, 3]
    assert proper_divisors(12) == [1, 2, 3, 4, 6]
    assert proper_divisors(7) == [1]
    with pytest.raises(ValueError):
        proper_divisors(1)


def test_p_adic_valuation():
    assert p_adic_valuation(2, 12) == 2
    assert p_adic_valuation(3, 12) == 1
    assert p_adic_valuation(5, 12) == 0
    with pytest.raises(ValueError):
        p_adic_valuation(4, 12)


def test_t_index():
    assert t_index(6, 3) == 2
    assert t_index(6, 0) == 1
    assert t_index(4, 6) == 2


def test_ramanujan_examples():
    assert ramanujan(0, 6) == 2
    # oracle first: direct unit sums over k in {1, 5}
    assert round(unit_cosine_sum(3, 6)) == -2
    assert round(unit_cosine_sum(2, 6)) == -1
    assert ramanujan(3, 6) == -2
    assert ramanujan(2, 6) == -1


def test_ramanujan_at_n_one():
    assert ramanujan(0, 1) == ramanujan(5, 1) == 1


@given(st.integers(1, 500), st.integers(0, 2000))
def test_ramanujan_symmetry_and_period(n, j):
    j = j % (n + 1)
    assert ramanujan(j, n) == ramanujan(n - j, n)
    assert ramanujan(j + 7 * n, n) == ramanujan(j, n)


def test_ramanujan_zero_sum():
    for n in range(2, 300):
        assert sum(ramanujan(j, n) for j in range(n)) == 0


def test_ramanujan_matches_unit_cosine_sum():
    for n in range(1, 201):
        for j in range(n):
            approx = unit_cosine_sum(j, n)
            assert abs(approx - round(approx)) < 1e-6
            assert ramanujan(j, n) == round(approx)
