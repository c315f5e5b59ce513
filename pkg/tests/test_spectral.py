import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from logenriques import spectral as S

import oracles


def test_td_prime_series():
    assert S.td_prime_series(8) == [Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 180), 0,
                                    Fraction(1, 5040), 0, Fraction(-1, 151200), 0]
    with pytest.raises(S.SpectralError):
        S.td_prime_series(9)


def test_todd_series_is_inverse():
    td = S.todd_series(6)
    base = [Fraction((-1) ** n, math.factorial(n + 1)) for n in range(7)]
    prod = [sum(td[i] * base[n - i] for i in range(n + 1)) for n in range(7)]
    assert prod == [1, 0, 0, 0, 0, 0, 0]


def test_bost_exponent_p1():
    assert S.bost_scaling_exponent(1, [1, 0], S.td_prime_integral_curve(2)) == Fraction(-2, 3)
    with pytest.raises(S.SpectralError):
        S.bost_scaling_exponent(2, [1, 0], 0)


def test_p1_zeta0_against_heat_trace_oracle():
    r = S.p1_torsion_zeta(1.0)
    assert abs(r.zeta0 - oracles.heat_trace_zeta0(1.0)) < 1e-8
    assert abs(r.zeta0 + 2 / 3) < 1e-14


def test_p1_zeta_prime_high_precision():
    # value frozen from the Hurwitz route at 50 digits
    assert abs(S.p1_torsion_zeta(1.0).zeta_prime0 - (-1.16168457480)) < 1e-10


@given(st.floats(0.5, 5.0))
def test_p1_continuation_matches_direct_sum(s):
    if s < 1.2:
        s += 1.0
    assert math.isclose(float(mpmath.re(S.p1_zeta(s, 2.0))), S.p1_zeta_direct(s, 2.0), rel_tol=1e-10)


@given(st.floats(0.1, 50.0))
def test_p1_ratio_power_law(lam):
    assert math.isclose(S.p1_torsion_ratio(lam), lam ** (-2 / 3), rel_tol=1e-10)


def test_p1_zeta0_normalization_independent():
    assert abs(S.p1_torsion_zeta(7.5).zeta0 - S.p1_torsion_zeta(1.0).zeta0) < 1e-15


def test_p1_tail_guard():
    with pytest.raises(S.SpectralError):
        S.p1_torsion_zeta(1.0, j_max=3)


def test_torus_zeta0():
    assert abs(S.torus_zeta0() + 1.0) < 1e-15


@pytest.mark.parametrize("n", range(2, 7))
def test_alternating_factor_vanishes(n):
    assert S.alternating_factor(n) == 0


def test_cone_constants_n2():
    k = S.cone_constants(2)
    assert math.isclose(k["d"], 0.5) and math.isclose(k["d_prime"], 0.25) and math.isclose(k["c"], 2.25)


def test_cone_divergence():
    r = S.cone_zeta_derivative(S.ConeZetaParams(2, 0.1))
    assert abs(r.divergence_coefficient / 0.5 - 1) < 1e-3
    assert r.ln3delta_coefficient == -r.divergence_coefficient
    assert r.partial_torsion == 0.0 and r.alternating_factor == 0


def test_cone_params_validation():
    with pytest.raises(S.SpectralError):
        S.ConeZetaParams(1, 0.1)
    with pytest.raises(S.SpectralError):
        S.ConeZetaParams(2, 0.0)


@given(st.integers(0, 10**6))
def test_bcov_identity_random(seed):
    spec = S.random_spectrum(random.Random(seed))
    chk = S.bcov_surface_identity(spec)
    assert chk.equal and chk.lhs == chk.rhs


def test_bcov_rejects_inconsistent_spectrum():
    t = S.complete_spectrum(Fraction(1), Fraction(2))
    t[1, 1] += 1
    with pytest.raises(S.SpectralError):
        S.bcov_surface_identity(S.HodgeSpectrum(t, t))
