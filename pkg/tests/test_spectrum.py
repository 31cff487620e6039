from math import gcd

import pytest
from hypothesis import given, strategies as st

from icgraph.core import IcgSpec, complement_divisors, degree, make_spec, symbol_set
from icgraph.numtheory import factorize, proper_divisors
from icgraph.spectrum import (
    complement_spectrum,
    eigenvalue,
    full_spectrum,
    least_eigenvalue,
    spread,
)
from oracles import all_specs, root_sum


def test_eigenvalue_examples():
    assert eigenvalue(IcgSpec(6, (1, 3)), 3) == -3
    assert all(eigenvalue(IcgSpec(6, (1, 2, 3)), j) == -1 for j in range(1, 6))
    assert eigenvalue(IcgSpec(12, (1, 3, 6)), 6) == -5
    with pytest.raises(ValueError):
        eigenvalue(IcgSpec(6, (1,)), 6)


def test_full_spectrum_examples():
    # unit-root sums w^j + w^(5j) for n = 6, evaluated directly
    oracle = [round(root_sum(6, [1, 5], j)) for j in range(6)]
    assert oracle == [2, 1, -1, -2, -1, 1]
    assert full_spectrum(IcgSpec(6, (1,))).values == tuple(oracle)
    assert full_spectrum(IcgSpec(6, (1, 2, 3))).values == (5, -1, -1, -1, -1, -1)
    assert full_spectrum(IcgSpec(12, (1, 3))).values[6] == -6


def test_spectrum_of_6_1_3_confirmed_by_root_sums():
    spec = IcgSpec(6, (1, 3))
    oracle = [root_sum(6, symbol_set(spec).members, j) for j in range(6)]
    assert all(abs(x - round(x)) < 1e-9 for x in oracle)
    assert full_spectrum(spec).values == (3, 0, 0, -3, 0, 0) == tuple(round(x) for x in oracle)
    assert full_spectrum(spec).to_json(spec) == {"n": 6, "divisors": [1, 3], "lambda": [3, 0, 0, -3, 0, 0]}


def test_least_eigenvalue_examples():
    assert least_eigenvalue(IcgSpec(6, (1, 3))) == (-3, [3])
    assert least_eigenvalue(IcgSpec(12, (1, 3))) == (-6, [6])
    assert least_eigenvalue(IcgSpec(6, (1,))) == (-2, [3])
    assert least_eigenvalue(IcgSpec(6, ())) == (0, [1, 2, 3, 4, 5])


def test_spread_examples():
    assert spread(IcgSpec(6, (1, 3))) == 6
    assert spread(IcgSpec(6, (1, 2, 3))) == 6
    values = full_spectrum(IcgSpec(12, (1,))).values
    assert values[0] == 4 and min(values[1:]) == -4 and values.index(-4) == 6
    assert spread(IcgSpec(12, (1,))) == 8


def test_complement_spectrum_examples():
    assert complement_spectrum(IcgSpec(6, (1, 2, 3))).values == (0,) * 6
    assert complement_spectrum(IcgSpec(6, (1, 3))).values[0] == 2 == degree(IcgSpec(6, (2,)))
    assert complement_spectrum(IcgSpec(6, (1,))).values[3] == 1 == eigenvalue(IcgSpec(6, (2, 3)), 3)


@given(st.integers(2, 300), st.data())
def test_spectrum_invariants(n, data):
    chosen = data.draw(st.sets(st.sampled_from(proper_divisors(n)), min_size=1))
    spec = make_spec(n, chosen)
    v = full_spectrum(spec).values
    assert len(v) == n
    assert v[0] == degree(spec)
    assert sum(v) == 0
    assert all(v[j] == v[n - j] for j in range(1, n))
    assert min(v) >= -(n // factorize(n).smallest_prime)
    assert all(eigenvalue(spec, j) == v[j] for j in (0, 1, n - 1, n // 2))


def test_complement_relation_exhaustive():
    for n in range(2, 61):
        for spec in all_specs(n):
            comp = complement_divisors(spec)
            assert complement_spectrum(spec).values == full_spectrum(comp).values


def test_perron_equality_iff_gcd_above_one():
    for n in range(2, 61):
        for spec in all_specs(n):
            v = full_spectrum(spec).values
            g = gcd(*spec.divisors)
            hits = [j for j in range(1, n) if v[j] == v[0]]
            if g > 1:
                assert n // g in hits
            else:
                assert not hits


def test_spread_bounded_by_order():
    for n in range(2, 61):
        assert all(spread(spec) <= n for spec in all_specs(n))
