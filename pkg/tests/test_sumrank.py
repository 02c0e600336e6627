import itertools

import numpy as np
import pytest

from subdesigns import design as de
from subdesigns import linalg
from subdesigns import sumrank as sr
from subdesigns.errors import (
    DegenerateCode,
    DegenerateDual,
    InvalidDistance,
    LengthProfileBroken,
    NotInvertible,
    ProfileNotSorted,
    ZeroMember,
)
from subdesigns.fieldcore import DTYPE
from subdesigns.gf import make_tower
from subdesigns.repro import glued_design, pseudoregulus_design, twisted_design
from subdesigns.subspace import AmbientSpace, span_fq


@pytest.fixture(scope="module")
def pseudo9():
    return pseudoregulus_design(3, 2, 1, 2)


@pytest.fixture(scope="module")
def code9(pseudo9):
    return sr.code_from_system(pseudo9)


def test_code_from_system(code9):
    assert code9.lengths == (2, 2) and code9.k == 2 and code9.non_degenerate


def test_round_trip_profile(code9, pseudo9):
    D2 = sr.system_from_code(code9)
    assert sorted(D2.dims) == sorted(pseudo9.dims)
    assert de.design_profile(D2, 1).A_min == de.design_profile(pseudo9, 1).A_min


def test_zero_member_rejected():
    t = make_tower(2, 1, 2)
    amb = AmbientSpace(t, 2)
    D = de.SubspaceDesign(amb, [span_fq(amb, []), span_fq(amb, [(t.one(), t.zero())])])
    with pytest.raises(ZeroMember):
        sr.code_from_system(D)


def test_degenerate_code_rejected():
    t = make_tower(2, 1, 2)
    blocks = [np.array([[1, 1], [0, 0]]), np.array([[0], [1]])]
    C = sr.SumRankCode(t, (2, 1), blocks)
    assert not C.non_degenerate
    with pytest.raises(DegenerateCode):
        sr.system_from_code(C)


def test_weights(code9):
    assert sr.sumrank_weight(code9, [0, 0]) == 0
    assert sr.sumrank_weight(code9, [1, 0]) == 4
    # weight agreement (direct vs geometric) over every codeword class
    t = code9.tower
    from subdesigns.subspace import canonical_projective_reps

    for x in canonical_projective_reps(t.order, code9.k):
        sr.sumrank_weight(code9, x, check=True)  # asserts internally


def test_support_blocks(code9):
    s = sr.support(code9, [1, 0])
    assert s.dims == (2, 2)  # both blocks fully supported for x = (1, 0)
    z = sr.support(code9, [0, 0])
    assert z.dims == (0, 0)
    # containment is reflexive and respects the zero support
    assert s.contains(z, code9.tower.fq) and s.contains(s, code9.tower.fq)
    assert not z.contains(s, code9.tower.fq)


def test_support_full_and_zero_blocks():
    # codeword pattern ((1, i), (0, 0)) over n = (2, 2): support (F_3^2, zero)
    t = make_tower(3, 1, 2)
    i = t.gen().code
    C = sr.SumRankCode(t, (2, 2), [np.array([[1, 0], [0, 1]]), np.zeros((2, 2), dtype=int)])
    s = sr.support(C, [1, i])
    assert s.dims == (2, 0)
    assert s.basis(0).tolist() == [[1, 0], [0, 1]]


def test_min_distance_methods_agree(code9):
    d_h = sr.min_distance(code9, method="hyperplane")
    d_c = sr.min_distance(code9, method="classes")
    d_o = sr.min_distance(code9, method="codewords")
    assert d_h == d_c == d_o == 3


def test_repetition_style_k1_code():
    # k = 1 with independent entries per block: d = sum of block lengths
    t = make_tower(2, 1, 2)
    C = sr.SumRankCode(t, (2, 1), [np.array([[1, 2]]), np.array([[1]])])
    assert sr.min_distance(C, method="classes") == 3


def test_singleton_msrd(code9):
    v = sr.singleton_msrd(code9, d=3)
    assert v == {"d": 3, "j": 2, "delta": 0, "bound_log_q": 4, "code_log_q": 4,
                 "is_msrd": True, "optimal_bound": 1, "optimal_ok": True}
    with pytest.raises(InvalidDistance):
        sr.singleton_msrd(code9, d=5)
    with pytest.raises(ProfileNotSorted):
        sr.SumRankCode(code9.tower, (1, 2), [np.array([[1], [0]]), np.array([[1, 0], [0, 1]])])


def test_glued_msrd_equal_blocks():
    D = glued_design(3, 3, 4, 2)
    C = sr.code_from_system(D)
    d = sr.min_distance(C)
    v = sr.singleton_msrd(C, d=d)
    assert d == 5 and v["bound_log_q"] == 12 and v["is_msrd"]


def test_dual_code(code9):
    Cd = sr.dual_code(code9)
    assert Cd.k == code9.N - code9.k == 2
    assert sr.min_distance(Cd) == 3  # tm - d + 2 = 4 - 3 + 2
    assert sr.singleton_msrd(Cd, d=3)["is_msrd"]
    Cdd = sr.dual_code(Cd)
    F = code9.tower.fqm
    assert np.array_equal(linalg.rref(F, Cdd.generator)[0], linalg.rref(F, code9.generator)[0])
    # full-space code has the zero code as dual
    t = make_tower(2, 1, 2)
    full = sr.SumRankCode(t, (2,), [np.eye(2, dtype=int)])
    assert sr.dual_code(full).k == 0


def test_delsarte_dual(pseudo9):
    Dd = sr.delsarte_dual(pseudo9)
    assert sorted(Dd.dims) == [2, 2]
    Ddd = sr.delsarte_dual(Dd)
    assert de.design_profile(Ddd, 1).A_min == de.design_profile(pseudo9, 1).A_min
    # basis-partition design in F_4^2 has a zero dual code -> DegenerateDual
    t = make_tower(2, 1, 2)
    amb = AmbientSpace(t, 2)
    one, zero = t.one(), t.zero()
    BP = de.construct_basis_partition(amb, [(one, zero), (zero, one)], [[1], [2]])
    with pytest.raises(DegenerateDual):
        sr.delsarte_dual(BP)
    # nonzero dual with an F_q-dependent (zero) block is also rejected
    amb3 = AmbientSpace(t, 3)
    e = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    members = [span_fq(amb3, [v]) for v in e] + [span_fq(amb3, [(one, one, zero)])]
    with pytest.raises(DegenerateDual):
        sr.delsarte_dual(de.SubspaceDesign(amb3, members))


def test_minimality(pseudo9, code9):
    ok_geo, wit = sr.is_minimal_code(code9, method="geometric")
    ok_pair, wit_pair = sr.is_minimal_code(code9, method="pairs")
    assert not ok_geo and not ok_pair
    assert wit is not None and wit_pair is not None
    baer = de.construct_field_partition(2, 2, 3)
    CB = sr.code_from_system(baer)
    assert sr.is_minimal_code(CB, method="geometric")[0]
    assert sr.is_minimal_code(CB, method="pairs")[0]
    # one-weight codes are minimal
    spec = sr.weight_spectrum(CB)
    assert len([w for w in spec if w]) == 1


def test_isometries(code9):
    ident = sr.apply_isometry(code9, [1, 1], [np.eye(2, dtype=int)] * 2, [0, 1])
    assert sr.weight_spectrum(ident) == sr.weight_spectrum(code9)
    swapped = sr.apply_isometry(code9, [1, 1], [np.eye(2, dtype=int)] * 2, [1, 0])
    assert sr.weight_spectrum(swapped) == sr.weight_spectrum(code9)
    assert sr.min_distance(swapped) == sr.min_distance(code9)
    i = code9.tower.gen()
    scaled = sr.apply_isometry(code9, [i, 1], [np.array([[1, 2], [1, 1]]), np.eye(2, dtype=int)], [0, 1])
    assert sr.weight_spectrum(scaled) == sr.weight_spectrum(code9)
    with pytest.raises(NotInvertible):
        sr.apply_isometry(code9, [1, 1], [np.array([[1, 2], [2, 1]]), np.eye(2, dtype=int)], [0, 1])
    with pytest.raises(LengthProfileBroken):
        sr.apply_isometry(code9, [1, 1], [np.eye(2, dtype=int)] * 2, [0, 0])


def test_weight_spectrum_exhaustive_against_codewords(code9):
    # spectrum from class scan matches a literal scan of all 81 codewords
    t = code9.tower
    spec = sr.weight_spectrum(code9)
    direct: dict[int, int] = {}
    for msg in itertools.product(range(t.order), repeat=code9.k):
        w = sr.sumrank_weight(code9, np.array(msg, dtype=DTYPE), check=False)
        direct[w] = direct.get(w, 0) + 1
    assert spec == direct


def test_msrd_iff_optimal_inequality():
    # in both closed regimes the Singleton verdict and the hyperplane
    # inequality of the optimal-design theorem must coincide
    from subdesigns.repro import max1_corpus

    seen = 0
    for name, D in max1_corpus():
        if D.ambient.tower.order ** D.ambient.k > 3**8:
            continue
        C = sr.code_from_system(D)
        v = sr.singleton_msrd(C, d=sr.min_distance(C))
        if "optimal_ok" in v:
            assert v["optimal_ok"] == v["is_msrd"], (name, v)
            seen += 1
    assert seen >= 10


def test_weight_agreement_exhaustive_small_codes():
    # direct expansion ranks vs geometric hyperplane sections, every class
    from subdesigns.subspace import canonical_projective_reps

    corpus = [
        sr.code_from_system(twisted_design(2, 3, 2, 1)),
        sr.code_from_system(de.construct_field_partition(2, 2, 3)),
    ]
    for C in corpus:
        for x in canonical_projective_reps(C.tower.order, C.k):
            sr.sumrank_weight(C, x, check=True)


def test_scalar_multiples_share_support(code9):
    # exhaustive over all classes and all scalars for the 81-word code
    t = code9.tower
    from subdesigns.subspace import canonical_projective_reps

    for x in canonical_projective_reps(t.order, code9.k):
        base = sr.support(code9, x)
        for c in range(2, t.order):
            scaled = sr.support(code9, np.asarray(t.fqm.mul(c, x), dtype=DTYPE))
            assert scaled == base
