import json
import math
import pathlib
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from logenriques import borcherds as B
from logenriques import delpezzo as D

GOLDEN = pathlib.Path(__file__).parent / "golden"
FAST = [(9, None), (8, "Sigma1"), (8, "Sigma0"), (7, None), (6, None)]


def test_golden_eval_degree6():
    g = json.loads((GOLDEN / "phi_eval_deg6.json").read_text())
    r = B.phi_eval(D.model(6), B.TubePoint.of((0, 0, 0, 0), (3, -1, -1, -1)), 8)
    bound = g["bound"]["value"]
    assert abs(r.log_value.real - g["log_re"]["value"]) <= 1e-12
    assert abs(r.truncation_bound - bound) <= 1e-18
    assert str(r.terms_used) == g["terms"]


def test_truncation_converges_within_bound():
    m = D.model(6)
    z = B.TubePoint.of((0, 0, 0, 0), (3, -1, -1, -1))
    a, b = B.phi_eval(m, z, 8), B.phi_eval(m, z, 16)
    assert abs(a.log_value - b.log_value) <= a.truncation_bound + b.truncation_bound
    assert b.truncation_bound < a.truncation_bound


def test_rejects_points_outside_cone():
    m = D.model(6)
    with pytest.raises(B.PhiError):
        B.phi_eval(m, B.TubePoint.of((0,) * 4, (2, -1, -1, -1)), 8)
    with pytest.raises(B.PhiError):
        B.phi_eval(m, B.TubePoint.of((0,) * 4, (3, -1, -1, -1)), Fraction(1, 2))


@pytest.mark.parametrize("d,v", FAST)
def test_auto_cap_meets_target(d, v):
    m = D.model(d, v)
    z = B.sample_points(m, 1, np.random.default_rng(1))[0]
    cap = B.auto_cap(m, z, 1e-10)
    assert B.phi_eval(m, z, cap).truncation_bound <= 1e-10


@pytest.mark.parametrize("d,v", FAST)
def test_translation_and_weyl(d, v):
    m = D.model(d, v)
    rng = np.random.default_rng(3)
    for z in B.sample_points(m, 2, rng):
        cap = B.auto_cap(m, z)
        assert B.translation_check(m, z, B.modular_translation(m, rng), cap).passed
        for s in D.symmetry_generators(m).values():
            cs = max(cap, B.auto_cap(m, z.mapped(s)))
            assert B.weyl_symmetry_check(m, z, s, cs).passed


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=2))
def test_translation_sigma0_any_even_shift(lam):
    m = D.model(8, "Sigma0")
    if m.inner(m.c1, lam) % 2:
        return
    z = B.sample_points(m, 1, np.random.default_rng(0))[0]
    assert B.translation_check(m, z, lam, B.auto_cap(m, z)).passed


def test_petersson_norm_consistent():
    m = D.model(7)
    z = B.sample_points(m, 1, np.random.default_rng(5))[0]
    cap = B.auto_cap(m, z)
    norm, log_norm, rel = B.petersson_norm(m, z, cap)
    assert math.isclose(math.log(norm), log_norm, rel_tol=1e-12)
    assert rel < 1e-9


@pytest.mark.parametrize("d,v", FAST[1:] + [(5, None)])
def test_heegner_walls_exponent_one(d, v):
    walls = B.heegner_exponent_scan(D.model(d, v))
    assert all(w.exponent == 1 for w in walls)


@pytest.mark.parametrize("link", [(9, "P2", 8), (8, "Sigma0", 7), (7, None, 6)])
def test_quasi_pullback_ratio_constant(link):
    pair = D.blowup_pair(*link)
    pts = B.sample_points(pair.small, 5, np.random.default_rng(11))
    res = B.compare_quasi_pullback(pair, pts)
    assert res.spread < 1e-6 and max(res.bounds) <= 1e-10
