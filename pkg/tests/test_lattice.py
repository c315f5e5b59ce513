import numpy as np
import pytest
from hypothesis import given, strategies as st

from logenriques import lattice as L

from oracles import brute_force_vectors


def test_k3_lattice_invariants():
    k3 = L.k3_lattice()
    assert k3.rank == 22
    assert k3.signature() == (3, 19)
    assert abs(k3.discriminant()) == 1
    assert k3.is_even()


def test_e8_even_unimodular():
    e8 = L.E8_minus()
    assert e8.discriminant() == 1 and e8.is_even() and e8.signature() == (0, 8)


@pytest.mark.parametrize("k", range(1, 10))
def test_lambda_signature(k):
    lam = L.lambda_k(k)
    assert lam.signature() == (2, 10 - k)
    assert abs(lam.discriminant()) == 1


def test_even_form_only_at_8():
    assert L.lambda_k(8, even=True).is_even()
    with pytest.raises(L.LatticeError):
        L.lambda_k(2, even=True)


@pytest.mark.parametrize("k,even", [(1, False), (5, False), (8, True), (9, False)])
def test_embedding_complement(k, even):
    src = L.rescale(L.lambda_k(k, even), 2)
    emb = L.embedding_search(src, L.k3_lattice())
    assert emb is not None and emb.is_primitive()
    comp, _ = L.orthogonal_complement(emb)
    assert comp.rank == 22 - src.rank
    assert abs(comp.discriminant()) == 2 ** (12 - k)


def test_bad_embedding_matrix_rejected():
    with pytest.raises(L.LatticeError):
        L.LatticeEmbedding(L.U(), L.U(), ((1, 0), (0, 2)))


def test_degenerate_gram_rejected():
    with pytest.raises(L.LatticeError):
        L.Lattice(((1, 1), (1, 1)))


def test_smith_invariants():
    assert L.smith_invariants([[2, 0], [0, 4]]) == [2, 4]
    assert L.smith_invariants([[1, 2], [3, 4]]) == [1, 2]


small_ints = st.integers(-4, 4)
matrices = st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3)


@given(matrices)
def test_determinant_matches_numpy(m):
    assert L.determinant(m) == round(np.linalg.det(np.array(m, dtype=float)))


@given(matrices, st.integers(1, 3))
def test_rescale_discriminant(m, n):
    g = [[m[i][j] + m[j][i] for j in range(3)] for i in range(3)]
    if L.determinant(g) == 0:
        return
    lat = L.Lattice(g)
    assert L.rescale(lat, n).discriminant() == n**3 * lat.discriminant()


@given(st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3))
def test_lll_preserves_lattice(rows):
    if L.determinant(rows) == 0:
        return
    red = L.lll_reduce([list(r) for r in rows])
    assert abs(L.determinant(red)) == abs(L.determinant(rows))


def test_e8_roots():
    assert len(L.enumerate_definite(L.E8_minus(), -2)) == 240


@given(st.integers(1, 5))
def test_definite_enumeration_against_brute_force(norm):
    pts = L.enumerate_definite(L.diag(0, 3), -norm)
    brute = sorted(tuple(x - 2 for x in v) for v in np.ndindex(5, 5, 5)
                   if sum((x - 2) ** 2 for x in v) == norm)
    assert pts == brute


@given(st.integers(1, 4), st.sampled_from([-1, -2, 0]))
def test_lorentzian_enumeration_against_brute_force(cap, norm):
    lat = L.diag(1, 3)
    y = (3, -1, -1, -1)
    got = L.enumerate_lorentzian(lat, y, cap, norm, norm)
    assert all(lat.norm(v) == norm for v in got)
    assert sorted(got) == brute_force_vectors(lat.gram, norm, y, cap, 6)


def test_lorentzian_requires_hyperbolic():
    with pytest.raises(L.LatticeError):
        L.enumerate_lorentzian(L.diag(2, 2), (1, 0, 0, 0), 3, -1)
