import itertools

import pytest
from hypothesis import given, strategies as st

from froeberg.combinatorics import (
    ExponentVector,
    binomial,
    dim_graded,
    monomial_index,
    monomials,
)
from froeberg.errors import ResourceLimitError
from froeberg.series import full_ring_series


def pascal_rows(size):
    rows = [[1]]
    for a in range(1, size + 1):
        prev = rows[-1]
        rows.append([1] + [prev[b - 1] + prev[b] for b in range(1, a)] + [1])
    return rows


PASCAL = pascal_rows(40)


@pytest.mark.parametrize("a,b,expected", [(0, 0, 1), (14, 4, 1001), (17, 4, 2380), (3, 5, 0)])
def test_binomial_examples(a, b, expected):
    assert binomial(a, b) == expected


def test_binomial_matches_pascal_triangle():
    for a in range(41):
        for b in range(a + 1):
            assert binomial(a, b) == PASCAL[a][b]
    for a in range(1, 41):
        for b in range(1, a + 1):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


def test_binomial_large_is_exact():
    # well past 64 bits; multiplicative formula stays integral at every step
    expected = 1
    for i in range(1, 101):
        expected = expected * (100 + i) // i
    assert binomial(200, 100) == expected
    assert expected > 2**190


@pytest.mark.parametrize("n,m,expected", [(5, 10, 1001), (5, 2, 15), (1, 7, 1), (3, 0, 1), (2, -1, 0)])
def test_dim_graded(n, m, expected):
    assert dim_graded(n, m) == expected


def test_dim_graded_rejects_zero_variables():
    with pytest.raises(ValueError):
        dim_graded(0, 3)


def test_monomials_examples():
    assert [v.exponents for v in monomials(2, 2)] == [(2, 0), (1, 1), (0, 2)]
    assert [v.exponents for v in monomials(3, 1)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(monomials(3, 2)) == 6


def test_monomials_are_lex_descending_and_complete():
    for n in range(1, 5):
        for m in range(6):
            got = [v.exponents for v in monomials(n, m)]
            brute = sorted(
                (e for e in itertools.product(range(m + 1), repeat=n) if sum(e) == m),
                reverse=True,
            )
            assert got == brute


def test_enumeration_matches_dimension():
    for n in range(1, 7):
        for m in range(13):
            assert len(monomials(n, m)) == dim_graded(n, m)


def test_monomial_index_examples():
    assert monomial_index(ExponentVector.of((2, 0))) == 0
    assert monomial_index((0, 2)) == 2


def test_monomial_index_round_trip():
    for n in range(1, 6):
        for m in range(7):
            basis = monomials(n, m)
            assert [monomial_index(v) for v in basis] == list(range(len(basis)))


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_monomial_index_in_range(exps):
    v = ExponentVector.of(exps)
    idx = monomial_index(v)
    assert 0 <= idx < dim_graded(v.n, v.degree)
    assert monomials(v.n, v.degree)[idx] == v


def test_malformed_exponent_vector():
    with pytest.raises(ValueError):
        ExponentVector((1, 2), 4)
    with pytest.raises(ValueError):
        ExponentVector.of((1, -1))
    with pytest.raises(ValueError):
        monomial_index(())


def test_monomial_cap():
    with pytest.raises(ResourceLimitError):
        monomials(6, 30, cap=1000)


def test_dimension_matches_ring_series():
    for n in range(1, 7):
        s = full_ring_series(n, 12)
        assert list(s) == [dim_graded(n, m) for m in range(13)]
