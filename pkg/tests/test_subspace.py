import numpy as np
import pytest
from hypothesis import given, strategies as st

from subdesigns.errors import AmbientMismatch, DimensionMismatch, EnumerationCapExceeded, ZeroSubspace
from subdesigns.gf import frobenius, make_tower
from subdesigns.subspace import (
    AmbientSpace,
    FqmSubspace,
    FqSubspace,
    enumerate_fqm_subspaces,
    enumerate_rref_matrices,
    fqm_dual,
    fqm_span,
    gaussian_binomial,
    hyperplane_meet_dim,
    hyperplane_normals,
    hyperplane_subspace,
    linear_set,
    meet_join,
    ordinary_dual,
    span_fq,
    subspace_count,
)


@pytest.fixture(scope="module")
def amb4():
    return AmbientSpace(make_tower(2, 1, 2), 2)


@pytest.fixture(scope="module")
def amb9():
    return AmbientSpace(make_tower(3, 1, 2), 2)


def subgeometry(amb):
    one, zero = amb.tower.one(), amb.tower.zero()
    return span_fq(amb, [(one, zero), (zero, one)])


def test_span_examples(amb4, amb9):
    assert subgeometry(amb4).dim == 2
    assert span_fq(amb4, []).dim == 0
    i = amb9.tower.gen()
    U1 = span_fq(amb9, [(amb9.tower.one(), amb9.tower.one()), (i, frobenius(i, 1))])
    assert U1.dim == 2  # pseudoregulus member as the rank of a 2x4 F_3 matrix
    with pytest.raises(DimensionMismatch):
        span_fq(amb4, [(amb4.tower.one(),)])


def test_meet_join_examples(amb4):
    U = subgeometry(amb4)
    W = FqmSubspace.from_rows(amb4, [[1, 0]])
    meet, join = meet_join(U, W)
    assert meet.dim == 1 and join.dim == 3
    assert meet_join(U, U) == (U, U)
    zero = span_fq(amb4, [])
    assert meet_join(U, zero)[0].dim == 0
    other = AmbientSpace(amb4.tower, 3)
    with pytest.raises(AmbientMismatch):
        meet_join(U, span_fq(other, []))


def test_fqm_span_examples(amb4):
    assert fqm_span(subgeometry(amb4)).dim == 2
    line = span_fq(amb4, [(amb4.tower.one(), amb4.tower.zero())])
    assert fqm_span(line).dim == 1
    assert fqm_span(span_fq(amb4, [])).dim == 0


def test_enumeration_counts(amb4):
    assert subspace_count(amb4, 1) == 5  # points of PG(1,4)
    pts = list(enumerate_fqm_subspaces(amb4, 1))
    assert len(pts) == len(set(pts)) == 5
    assert len(list(enumerate_fqm_subspaces(amb4, 0))) == 1
    big = AmbientSpace(make_tower(3, 1, 3), 4)
    assert subspace_count(big, 3) == 20440  # hyperplanes of PG(3,27)
    with pytest.raises(EnumerationCapExceeded):
        list(enumerate_fqm_subspaces(big, 3, cap=100))


@pytest.mark.parametrize("Q,k,s", [(4, 2, 1), (9, 2, 1), (4, 3, 1), (4, 3, 2), (8, 2, 1), (9, 3, 2), (2, 4, 2), (3, 4, 2)])
def test_enumeration_matches_gaussian_binomial(Q, k, s):
    seen = set()
    for M, piv in enumerate_rref_matrices(Q, s, k):
        seen.add(M.tobytes())
    assert len(seen) == gaussian_binomial(k, s, Q)


def test_enumeration_chunking(amb9):
    full = list(enumerate_fqm_subspaces(amb9, 1))
    split = list(enumerate_fqm_subspaces(amb9, 1, stop=4)) + list(enumerate_fqm_subspaces(amb9, 1, start=4))
    assert full == split


def test_hyperplane_sweep_agrees_with_generic(amb9):
    generic = set(enumerate_fqm_subspaces(amb9, amb9.k - 1))
    via_normals = {hyperplane_subspace(amb9, x) for x in hyperplane_normals(amb9)}
    assert generic == via_normals


def test_linear_set_examples(amb4, amb9):
    L = linear_set(subgeometry(amb4))
    assert len(L) == 3 and set(L.entries.values()) == {1}
    line = FqmSubspace.from_rows(amb4, [[1, 0]]).expand_fq()
    L2 = linear_set(line)
    assert len(L2) == 1 and list(L2.entries.values()) == [2]
    i = amb9.tower.gen()
    U1 = span_fq(amb9, [(amb9.tower.one(), amb9.tower.one()), (i, frobenius(i, 1))])
    L3 = linear_set(U1)
    assert len(L3) == 4 and set(L3.entries.values()) == {1}
    with pytest.raises(ZeroSubspace):
        linear_set(span_fq(amb4, []))


def test_ordinary_dual_examples(amb4):
    U = subgeometry(amb4)
    assert ordinary_dual(U) == U  # self-dual
    zero = span_fq(amb4, [])
    assert ordinary_dual(zero).dim == 4
    W = FqmSubspace.from_rows(amb4, [[1, 0]])
    lhs = meet_join(ordinary_dual(U), fqm_dual(W))[0].dim - meet_join(U, W)[0].dim
    assert lhs == 4 - 2 - 2 * 1 == 0


def test_dual_involution_exhaustive_f4(amb4):
    count = 0
    for r in range(5):
        for M, piv in enumerate_rref_matrices(2, r, 4):
            U = FqSubspace(amb4, M, piv)
            assert ordinary_dual(ordinary_dual(U)) == U
            count += 1
    assert count == 67


@given(st.integers(0, 10_000))
def test_grassmann_random(seed):
    amb = AmbientSpace(make_tower(3, 1, 2), 2)
    rng = np.random.default_rng(seed)
    U = FqSubspace.from_expanded_rows(amb, rng.integers(0, 3, (int(rng.integers(0, 5)), 4)))
    W = FqSubspace.from_expanded_rows(amb, rng.integers(0, 3, (int(rng.integers(0, 5)), 4)))
    meet, join = meet_join(U, W)
    assert meet.dim + join.dim == U.dim + W.dim


@given(st.integers(0, 10_000))
def test_span_canonical_under_fq_rescaling(seed):
    amb = AmbientSpace(make_tower(3, 1, 2), 2)
    t = amb.tower
    rng = np.random.default_rng(seed)
    vecs = rng.integers(0, 9, (3, 2))
    U1 = span_fq(amb, vecs.tolist())
    perm = rng.permutation(3)
    scals = rng.integers(1, t.q, 3)
    scaled = [[int(t.fqm.mul(int(s), int(c))) for c in vecs[i]] for i, s in zip(perm, scals)]
    assert span_fq(amb, scaled) == U1


def test_hyperplane_meet_dim_matches_meet(amb9):
    i = amb9.tower.gen()
    U1 = span_fq(amb9, [(amb9.tower.one(), amb9.tower.one()), (i, frobenius(i, 1))])
    for x in hyperplane_normals(amb9):
        direct = hyperplane_meet_dim(U1, x)
        via_meet = meet_join(U1, hyperplane_subspace(amb9, x))[0].dim
        assert direct == via_meet


def test_expand_contract_round_trip(amb9):
    rng = np.random.default_rng(0)
    V = rng.integers(0, 9, (10, 2))
    assert np.array_equal(amb9.contract(amb9.expand(V)), V)
