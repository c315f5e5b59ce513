import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from logenriques import invariants as I


def _inputs(rng: random.Random, k: int) -> I.InvariantInputs:
    return I.InvariantInputs(k, rng.uniform(0.1, 10), rng.uniform(0.1, 10), rng.uniform(0.1, 10),
                             tuple(rng.uniform(0.1, 10) for _ in range(k)), rng.uniform(-5, 5))


@pytest.mark.parametrize("k", range(1, 11))
def test_c2_arithmetic(k):
    c = I.c2_integrals(k)
    assert c["one_24th_int_c2_Y"] == Fraction(16 - k, 32)
    assert c["int_c2_Y"] == Fraction(3 * (16 - k), 4)
    assert c["int_c2_X"] == 24 - Fraction(3 * k, 2)
    assert I.xi_rescaling_exponent(k) == 0


@pytest.mark.parametrize("k", range(1, 11))
def test_chi_orb(k):
    assert I.chi_orb(k) == 12 * k == I.chi_orb_crosscheck(k)


@given(st.integers(1, 10), st.integers(0, 10**6), st.floats(0.05, 20.0))
def test_xi_rescaling_invariance(k, seed, c):
    inp = _inputs(random.Random(seed), k)
    assert math.isclose(I.log_tau_k(I.rescale_xi(inp, c)), I.log_tau_k(inp), abs_tol=1e-10)


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_anomaly_partner_invariance(k, seed):
    rng = random.Random(seed)
    inp = _inputs(rng, k)
    other = I.anomaly_partner(inp, rng.uniform(0.1, 10), [rng.uniform(0.1, 10) for _ in range(k)],
                              rng.uniform(-5, 5))
    assert math.isclose(I.log_tau_k(other), I.log_tau_k(inp), abs_tol=1e-10)


def test_input_validation():
    with pytest.raises(I.InvariantError):
        I.InvariantInputs(2, 1.0, 1.0, 1.0, (1.0,), 0.0)
    with pytest.raises(I.InvariantError):
        I.InvariantInputs(1, -1.0, 1.0, 1.0, (1.0,), 0.0)
    with pytest.raises(I.InvariantError):
        I.InvariantInputs(11, 1.0, 1.0, 1.0, (1.0,) * 11, 0.0)


def test_tau_k_simple_bundle():
    inp = I.InvariantInputs(1, 2.0, 3.0, 1.0, (1.0,), 0.0)
    assert math.isclose(I.tau_k_assemble(inp), 6.0)


def test_bcov_and_tau_m():
    assert I.tau_bcov_from_tau_k(0.5) == 4.0
    t = I.tau_M_assemble(2.0, 3.0, 5.0, 7.0, 10)
    assert math.isclose(t, 2.0 ** 1 * 105.0)
    op = I.tau_k_from_tau_M(t)
    assert math.isclose(op.value, math.sqrt(t)) and op.symbol == "C(k)^-1"
    assert math.isclose(I.bcov_petersson_offset(4.0, 16.0), math.log(4.0) - math.log(4.0))


@pytest.mark.parametrize("k", [1, 4, 9])
def test_disc_m_k(k):
    assert I.disc_M_k(k) == 2 ** (12 - k)


def test_comparison_ratio():
    r = I.bcov_comparison_ratio(2, 4, 1, 2, 16)
    assert r.numeric == Fraction(1, 64) / (Fraction(1, 4) * Fraction(1, 4))
    assert r.symbol == "C(k)^8" and r.r_tilde == 12
    with pytest.raises(I.InvariantError):
        I.bcov_comparison_ratio(2, 0, 1, 1, 1)


def test_covolume():
    assert I.covolume(10, 2, 8, 1.5) == float(Fraction(4 * 8, 2**11)) * 1.5
