from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from logenriques import qseries as Q
from logenriques import reference

ks = st.integers(min_value=0, max_value=9)


series = st.builds(
    lambda lead, rest, order: Q.QSeries.from_exponents(
        {Fraction(-1): lead, **{Fraction(e + 1, 4): c for e, c in enumerate(rest)}}, order),
    st.sampled_from([1, -1]),
    st.lists(st.integers(-5, 5), max_size=12),
    st.integers(min_value=1, max_value=4),
)


def test_exponent_grid():
    assert Q.QExponent.of(Fraction(1, 8)).numerator_24 == 3
    with pytest.raises(Q.QSeriesError):
        Q.QExponent.of(Fraction(1, 5))


def test_coeff_beyond_truncation_raises():
    s = Q.c0_series(2, 3)
    s.coeff(2)
    with pytest.raises(Q.QSeriesError):
        s.coeff(3)


def test_known_leading_coefficients():
    # k = 3 table, cross-checked against the naive expansion below
    s0, s1 = Q.c0_series(3, 3), Q.c1_series(3, 3)
    assert s0.items() == [(Fraction(-1), 1), (Fraction(0), 14), (Fraction(1), 96), (Fraction(2), 448)]
    assert s1.items() == [(Fraction(3, 4), -64), (Fraction(11, 4), -1216)]


def test_eta_is_euler_product():
    # eta^1 q^{-1/24} = 1 - q - q^2 + q^5 + q^7 - ...
    e = Q.eta_series(1, 1, Fraction(10) + Fraction(1, 24))
    shifted = {x - Fraction(1, 24): c for x, c in e.items()}
    assert shifted == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1}


@given(ks)
def test_matches_naive_oracle(k):
    assert dict(Q.c0_series(k, 12).items()) == reference.c0_naive(k, 12)
    assert dict(Q.c1_series(k, 12).items()) == reference.c1_naive(k, 12)


@given(ks)
def test_multiplicativity(k):
    order = 10
    th0, th1 = Q.theta_series(0, order + 2), Q.theta_series(1, order + 2)
    assert Q.c0_series(k, order) == Q.truncate(Q.c0_series(0, order + 2) * Q.power(th0, k), order)
    if k:
        assert Q.c1_series(k, order) == Q.truncate(Q.c1_series(0, order + 2) * Q.power(th1, k), order)


@given(ks)
def test_c1_support(k):
    for e, _ in Q.c1_series(k, 8).items():
        assert (e - Fraction(k, 4)).denominator == 1


@given(series)
def test_inverse_roundtrip(s):
    one = s * Q.inverse(s)
    assert one.items() == [(Fraction(0), 1)]


@given(series, st.integers(0, 4))
def test_power_is_repeated_product(s, n):
    expect = Q.QSeries.one(s.order24 - s.valuation24)
    for _ in range(n):
        expect = expect * s
    got = Q.power(s, n)
    common = min(got.order24, expect.order24)
    assert Q.truncate(got, Fraction(common, 24)) == Q.truncate(expect, Fraction(common, 24))


@given(series, series)
def test_mul_commutes(a, b):
    assert a * b == b * a


def test_coefficient_table_lookup():
    assert Q.coeff_c0(3, 2) == 448
    assert Q.coeff_c1(3, Fraction(11, 4)) == -1216
    assert Q.coeff_c1(3, Fraction(1, 2)) == 0
    assert Q.coeff_c0(0, -2) == 0


def test_csv_integer_columns():
    text = Q.coefficient_csv(3, 3)
    lines = text.strip().splitlines()
    assert lines[0] == "l_times_4,c0,c1"
    for row in lines[1:]:
        assert all(int(x) == int(x) for x in row.split(","))
    assert "11,0,-1216" in lines


@pytest.mark.parametrize("k", [-1, 10])
def test_k_range(k):
    with pytest.raises(Q.QSeriesError):
        Q.c0_series(k, 2)
