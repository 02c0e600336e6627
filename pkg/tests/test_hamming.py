import pytest

from subdesigns import design as de
from subdesigns import hamming as ha
from subdesigns.errors import NotTwoIntersection, ZeroMember
from subdesigns.gf import make_tower
from subdesigns.repro import glued_design, pseudoregulus_design
from subdesigns.subspace import AmbientSpace, FqmSubspace, span_fq


@pytest.fixture(scope="module")
def subgeometry_design():
    t = make_tower(2, 1, 2)
    amb = AmbientSpace(t, 2)
    one, zero = t.one(), t.zero()
    return de.SubspaceDesign(amb, [span_fq(amb, [(one, zero), (zero, one)])])


def test_ext_system_examples(subgeometry_design):
    P = ha.ext_system(subgeometry_design)
    assert P.length == 3 and set(P.entries.values()) == {1}
    t = subgeometry_design.ambient.tower
    amb = subgeometry_design.ambient
    line = FqmSubspace.from_rows(amb, [[1, 0]]).expand_fq()
    P2 = ha.ext_system(de.SubspaceDesign(amb, [line]))
    assert P2.length == 3 and list(P2.entries.values()) == [3]  # (q^2-1)/(q-1)
    with pytest.raises(ZeroMember):
        ha.ext_system(de.SubspaceDesign(amb, [span_fq(amb, [])]))


def test_ext_length_for_glued_design():
    D = glued_design(3, 3, 4, 2)
    P = ha.ext_system(D)
    assert P.length == 2 * (3**6 - 1) // 2 == 728


def test_weight_enumerator_vs_oracle(subgeometry_design):
    P = ha.ext_system(subgeometry_design)
    enum = ha.weight_enumerator(P)
    assert enum == {0: 1, 2: 9, 3: 6}
    assert ha.materialized_enumerator(P) == enum


def test_one_weight_covering_system():
    baer = de.construct_field_partition(2, 2, 3)
    P = ha.ext_system(baer)
    enum = ha.weight_enumerator(P)
    nonzero = [w for w in enum if w]
    assert len(nonzero) == 1
    assert ha.materialized_enumerator(P) == enum


def test_headline_two_weight_example():
    D = glued_design(3, 3, 4, 2)
    P = ha.ext_system(D)
    enum = ha.weight_enumerator(P)
    assert enum == {0: 1, 675: 18928, 702: 512512}
    params = ha.srg_from_two_intersection(P)
    assert params.as_tuple() == (531441, 18928, 1327, 650)


def test_closed_form_enumerator_max1():
    # counts (q^m-1) h_i at weights N - w_i, per the two-weight closed form
    D = pseudoregulus_design(3, 2, 1, 2)
    P = ha.ext_system(D)
    enum = ha.weight_enumerator(P)
    q, m, k, t = 3, 2, 2, 2
    h0, h1 = de.h_values(q, m, k, t)
    N = t * (q ** (m * k // 2) - 1) // (q - 1)
    w0 = t * (q ** (m * (k - 2) // 2) - 1) // (q - 1)
    w1 = (t - 1) * (q ** (m * (k - 2) // 2) - 1) // (q - 1) + (q ** (m * (k - 2) // 2 + 1) - 1) // (q - 1)
    assert enum == {0: 1, N - w1: (q**m - 1) * h1, N - w0: (q**m - 1) * h0}


def test_closed_form_enumerator_across_corpus():
    # the sweep-side enumerator equals the (q^m - 1) h_i counts at N - w_i
    # for every certified maximum 1-design at desk scale
    from subdesigns.repro import max1_corpus

    for name, D in max1_corpus():
        if D.ambient.tower.order ** D.ambient.k > 3**8:
            continue
        t = D.ambient.tower
        q, m, k, tt = t.q, t.m, D.ambient.k, D.t
        P = ha.ext_system(D)
        enum = ha.weight_enumerator(P)
        h0, h1 = de.h_values(q, m, k, tt)
        e = m * (k - 2) // 2
        N = tt * (q ** (m * k // 2) - 1) // (q - 1)
        w0 = tt * (q**e - 1) // (q - 1)
        w1 = (tt - 1) * (q**e - 1) // (q - 1) + (q ** (e + 1) - 1) // (q - 1)
        expected = {0: 1}
        if h1:
            expected[N - w1] = (q**m - 1) * h1
        if h0:
            expected[N - w0] = expected.get(N - w0, 0) + (q**m - 1) * h0
        assert enum == expected, (name, enum, expected)


def test_degenerate_point_enumerator():
    # single point, k = 1: enumerator 1 + (q^m - 1) z
    t = make_tower(2, 1, 2)
    amb = AmbientSpace(t, 1)
    P = ha.ProjectiveSystem(amb, {(1,): 1})
    assert ha.weight_enumerator(P) == {0: 1, 1: 3}


def test_srg_small_graph(subgeometry_design):
    P = ha.ext_system(subgeometry_design)
    params = ha.srg_from_two_intersection(P, verify_graph=True)
    assert params.as_tuple() == (16, 9, 4, 6)
    dot = ha.export_dot(P)
    assert dot.startswith("graph srg {") and dot.count("--") == 16 * 9 // 2


def test_not_two_intersection():
    baer = de.construct_field_partition(2, 2, 3)
    with pytest.raises(NotTwoIntersection):
        ha.srg_from_two_intersection(ha.ext_system(baer))


def test_srg_feasibility_guard():
    with pytest.raises(AssertionError):
        ha.SrgParams(v=10, K=3, lam=0, mu=2)
