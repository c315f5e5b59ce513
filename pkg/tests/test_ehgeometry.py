import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, strategies as st

from logenriques import ehgeometry as EH

import oracles

coord = st.floats(min_value=-3, max_value=3, allow_nan=False)
points = st.tuples(coord, coord, coord, coord).filter(lambda v: sum(t * t for t in v) > 1e-2)
eps_values = st.sampled_from([0.1, 0.5, 1.0, 2.0])


def _z(v):
    return (complex(v[0], v[1]), complex(v[2], v[3]))


@given(points, eps_values)
def test_metric_determinant_is_one(v, eps):
    assert abs(EH.eh_metric(_z(v), eps).det - 1.0) < 1e-8


@given(points, eps_values)
def test_closed_form_matches_finite_differences(v, eps):
    z = _z(v)
    g = EH.eh_metric(z, eps).matrix
    fd = EH.eh_metric_fd(z, eps)
    assert np.abs(fd - g).max() < 1e-5 * max(1.0, np.abs(g).max())


def test_euclidean_limit():
    z = (0.7 + 0.2j, -0.3j)
    assert np.allclose(EH.eh_metric(z, 0.0).matrix, np.eye(2))
    assert abs(EH.eh_metric(z, 1e-9).min_eigenvalue - 1.0) < 1e-6


def test_singular_point_rejected():
    with pytest.raises(EH.EHError):
        EH.ConePoint.of(0.0, 0.0)
    with pytest.raises(EH.EHError):
        EH.error_term((0.0, 0.0), 1.0)


@given(points, st.floats(0.1, 3.0), st.floats(0.2, 5.0))
def test_potential_scaling(v, eps, delta):
    assert EH.potential_scaling_gap(_z(v), eps, delta) < 1e-10


@given(points, st.floats(0.1, 3.0), st.floats(0.2, 5.0), st.sampled_from(["smoothstep7", "exp_bump"]))
def test_glued_scaling(v, eps, delta, kind):
    assert EH.glued_scaling_gap(_z(v), eps, delta, EH.CutoffSpec(kind)) < 1e-10


@given(points, eps_values)
def test_error_split(v, eps):
    e = EH.error_term(_z(v), eps)
    assert math.isclose(e.total, e.e1 + e.e2, rel_tol=1e-9, abs_tol=1e-12)


def test_error_decays_like_inverse_square():
    c_small = EH.error_decay_constant(np.geomspace(1, 30, 10))
    c_large = EH.error_decay_constant(np.geomspace(1, 300, 20))
    assert c_large < 1.2 * c_small
    assert EH.error_decay_constant(np.geomspace(10, 300, 10), power=3) > 10


@pytest.mark.parametrize("kind", ["smoothstep7", "exp_bump"])
def test_cutoff_profile(kind):
    c = EH.CutoffSpec(kind, 2.0)
    r = np.linspace(0, 6, 601)
    rho = c(r)
    assert np.all(rho[r <= 2] == 1.0) and np.all(rho[r >= 4] == 0.0)
    assert np.all(np.diff(rho) <= 1e-15)


def test_cutoff_validation():
    with pytest.raises(EH.EHError):
        EH.CutoffSpec("linear")
    with pytest.raises(EH.EHError):
        EH.CutoffSpec("smoothstep7", 0.0)


@pytest.mark.parametrize("r,expect", [(0.3, "eh"), (2.5, "flat")])
def test_glued_metric_regions(r, expect):
    z = (r * (0.6 + 0.0j), r * 0.8j)
    g = EH.glued_metric(z, 0.3, 1.0, method="radial").matrix
    ref = EH.eh_metric(z, 0.3).matrix if expect == "eh" else np.eye(2)
    assert np.abs(g - ref).max() < 1e-12


@given(st.floats(0.5, 4.0), eps_values)
def test_glued_fd_matches_radial(r, eps):
    z = (r * 0.6, r * 0.8j)
    a = EH.glued_metric(z, eps * 0.1, 1.0, method="fd").matrix
    b = EH.glued_metric(z, eps * 0.1, 1.0, method="radial").matrix
    assert np.abs(a - b).max() < 1e-5


@pytest.mark.parametrize("r,eps", [("1/2", "1"), ("3/2", "1/2"), ("1", "2"), ("1/4", "1")])
def test_c2_density_against_symbolic_oracle(r, eps):
    exact = float(oracles.eh_c2_density_at(r, eps))
    got = float(EH.c2_density(np.array([float(sp.Rational(r))]), float(sp.Rational(eps)))[0])
    assert abs(got / exact - 1) < 1e-4


def test_symbolic_oracle_is_unitary_invariant():
    off = oracles.eh_c2_density_at(None, 1, point=(sp.Rational(1, 2), sp.Rational(1, 3), sp.Rational(1, 4), 0))
    u = sp.Rational(1, 4) + sp.Rational(1, 9) + sp.Rational(1, 16)
    assert sp.simplify(off - 12 / (sp.pi**2 * (1 + u**2) ** 3)) == 0


def test_closed_form_total_is_three():
    assert oracles.eh_c2_total_symbolic() == 3
    assert math.isclose(oracles.eh_c2_closed_form(0.5, 1.0), float(oracles.eh_c2_density_at("1/2", "1")))


@pytest.mark.parametrize("eps", [0.5, 1.0, 2.0])
def test_chern2_integral(eps):
    res = EH.chern2_radial_integral(eps)
    assert abs(res.value - 1.5) < 1e-4
    assert res.tail_exponent < -11
    assert abs(res.full_space - 2 * res.value) < 1e-15


def test_chern2_rejects_coarse_grid():
    with pytest.raises(EH.EHError):
        EH.chern2_radial_integral(1.0, grid=1, tol=1e-12)


@pytest.mark.parametrize("kind", ["smoothstep7", "exp_bump"])
def test_positivity_threshold_scales_with_delta_squared(kind):
    a = EH.positivity_probe(EH.CutoffSpec(kind), 1.0)
    b = EH.positivity_probe(EH.CutoffSpec(kind), 0.5)
    assert a.monotone and b.monotone
    assert math.isclose(a.eps_threshold, 4 * b.eps_threshold, rel_tol=1e-9)
    assert a.margins[0][1] > 0.9


def test_positivity_no_positive_eps():
    with pytest.raises(EH.EHError):
        EH.positivity_probe(EH.CutoffSpec(), 1.0, eps_grid=[100.0, 200.0])


def test_quasi_isometry_brackets_one():
    lo, hi = EH.quasi_isometry_constants(0.1, 1.0)
    assert 0 < lo <= 1.0 <= hi


def test_exceptional_curve_restriction():
    rep = EH.exceptional_restriction_check(1.0, [0.0, 0.5, 1.0, 2.0, 1j])
    assert all(abs(o - 4.0) < 0.2 for o in rep.orders)
    assert all(abs(x - 1.0) < 1e-5 for x in rep.limits)
    assert rep.symmetry_gap < 1e-4
