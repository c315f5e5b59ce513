import pytest
from hypothesis import given, strategies as st

from logenriques import delpezzo as D

FAST = [(9, None), (8, "Sigma1"), (8, "Sigma0"), (7, None), (6, None), (5, None), (4, None), (3, None)]
EXPECTED = {9: 0, 7: 3, 6: 6, 5: 10, 4: 16, 3: 27, 2: 56, 1: 240}


@pytest.mark.parametrize("d,v", FAST + [(2, None)])
def test_minus_one_classes_two_enumerators(d, v):
    m = D.model(d, v)
    fast = D.minus_one_classes(m)
    assert sorted(fast) == sorted(D.minus_one_classes_box(m))
    if v is None or v == "P2":
        assert len(fast) == EXPECTED[d]
    for a in fast:
        assert m.norm(a) == -1 and m.inner(a, m.c1) == 1


def test_hirzebruch_counts():
    assert len(D.model(8, "Sigma1").minus_one_classes) == 1
    assert len(D.model(8, "Sigma0").minus_one_classes) == 0


@pytest.mark.parametrize("d,v", [(8, "generic"), (5, "P2"), (9, "generic"), (7, "Sigma0")])
def test_inconsistent_variant(d, v):
    with pytest.raises(D.DelPezzoError):
        D.model(d, v)


def test_unknown_variant():
    with pytest.raises(D.DelPezzoError):
        D.model(6, "cubic")


@pytest.mark.parametrize("d,v", FAST)
def test_anticanonical_is_ample(d, v):
    m = D.model(d, v)
    assert m.norm(m.c1) == d
    assert D.kaehler_cone_contains(m, m.c1)


@pytest.mark.parametrize("d,v", FAST)
def test_symmetry_generators(d, v):
    m = D.model(d, v)
    for name, s in D.symmetry_generators(m).items():
        assert D.check_isometry(m, s) == (True, True, True), name


@pytest.mark.parametrize("small,variant,big", D.CHAIN)
def test_blowup_pairs(small, variant, big):
    p = D.blowup_pair(small, variant, big)
    assert p.big.norm(p.exceptional) == -1
    for v in p.small.minus_one_classes:
        assert p.big.norm(p.lift(v)) == -1


def test_blowup_pair_requires_adjacent():
    with pytest.raises(D.DelPezzoError):
        D.blowup_pair(7, None, 5)


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_effective_membership_is_cone(a):
    m = D.model(6)
    if D.in_effective_cone(m, a):
        assert D.in_effective_cone(m, [2 * t for t in a])
        for g in m.eff_generators:
            assert D.in_effective_cone(m, [t + s for t, s in zip(a, g)])


@given(st.integers(1, 4))
def test_enumerate_effective(cap):
    m = D.model(6)
    for a in D.enumerate_effective(m, m.c1, cap):
        assert 0 < m.inner(a, m.c1) <= cap
        assert D.in_effective_cone(m, a)


def test_describe():
    d = D.model(7).describe()
    assert d["minus_one_count"] == 3 and d["basis"] == ["H", "E1", "E2"]
