import pytest
from hypothesis import given, strategies as st

from ratmap.powerseries import (
    SeriesError,
    TruncatedSeries,
    exterior_factor,
    geometric_factor,
    series_mul,
)


def S(terms, n):
    return TruncatedSeries.from_terms(terms, n)


@pytest.mark.parametrize(
    "a, b, n, expected",
    [
        ({0: 1}, {0: 1, 1: 2, 2: 1}, 4, {0: 1, 1: 2, 2: 1}),
        ({0: 1, 3: 1}, {0: 1, 3: 1}, 6, {0: 1, 3: 2, 6: 1}),
        ([1] * 9, {0: 1, 1: -1}, 8, {0: 1}),
    ],
)
def test_series_mul_examples(a, b, n, expected):
    assert series_mul(S(a, n), S(b, n)) == S(expected, n)


def test_mul_rejects_mismatched_cutoffs():
    with pytest.raises(SeriesError, match="cutoff mismatch"):
        series_mul(TruncatedSeries.one(3), TruncatedSeries.one(4))


def test_coefficient_count_must_match_cutoff():
    with pytest.raises(SeriesError):
        TruncatedSeries((1, 2), 3)


def test_float_coefficients_rejected():
    with pytest.raises(SeriesError):
        TruncatedSeries((1.0,), 0)


def test_big_coefficients_stay_exact():
    s = exterior_factor(1, 200, 200)
    assert s[100] == 90548514656103281165404177077484163874504589675413336841320
    assert sum(s) == 2**200


@pytest.mark.parametrize(
    "r, n, expected",
    [(2, 7, {0: 1, 2: 1, 4: 1, 6: 1}), (4, 6, {0: 1, 4: 1}), (2, 0, {0: 1})],
)
def test_geometric_factor(r, n, expected):
    assert geometric_factor(r, n) == S(expected, n)


@pytest.mark.parametrize("r", [0, -2, 3])
def test_geometric_factor_domain(r):
    with pytest.raises(SeriesError):
        geometric_factor(r, 5)


@pytest.mark.parametrize(
    "r, d, n, expected",
    [(3, 4, 6, {0: 1, 3: 4, 6: 6}), (3, 0, 6, {0: 1}), (1, 2, 3, {0: 1, 1: 2, 2: 1})],
)
def test_exterior_factor(r, d, n, expected):
    assert exterior_factor(r, d, n) == S(expected, n)


@pytest.mark.parametrize("r", [2, 0, -1])
def test_exterior_factor_domain(r):
    with pytest.raises(SeriesError):
        exterior_factor(r, 1, 5)


def test_str():
    assert str(S({0: 1, 2: 3}, 3)) == "1 + 3*t^2 + O(t^4)"


@st.composite
def series_triples(draw):
    n = draw(st.integers(0, 12))
    coeffs = st.lists(st.integers(-50, 50), min_size=n + 1, max_size=n + 1)
    return tuple(TruncatedSeries(tuple(draw(coeffs)), n) for _ in range(3))


@given(series_triples())
def test_mul_commutative_associative(abc):
    a, b, c = abc
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


@given(st.sampled_from([2, 4, 6, 8, 10]), st.integers(0, 30))
def test_geometric_inverts_one_minus(r, n):
    assert series_mul(geometric_factor(r, n), S({0: 1, r: -1}, n)) == TruncatedSeries.one(n)


@given(st.sampled_from([1, 3, 5, 7]), st.integers(0, 6), st.integers(0, 24))
def test_exterior_is_repeated_product(r, d, n):
    expected = TruncatedSeries.one(n)
    for _ in range(d):
        expected = series_mul(expected, exterior_factor(r, 1, n))
    assert exterior_factor(r, d, n) == expected
