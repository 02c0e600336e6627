import numpy as np
import pytest

from subdesigns import design as de
from subdesigns import strongbridge as sb
from subdesigns.errors import (
    BadParameters,
    DegreeTooLarge,
    NotAMultiple,
    NotEvasive,
    NotIrreducible,
    PlacesCollide,
)
from subdesigns.fieldcore import poly_is_irreducible
from subdesigns.gf import make_tower
from subdesigns.subspace import AmbientSpace, FqmSubspace, FqSubspace, span_fq


@pytest.fixture(scope="module")
def strong_f4():
    """Two F_4-lines of F_4^2: a strong (1,1)-design."""
    t = make_tower(2, 1, 2)
    amb = AmbientSpace(t, 2)
    V1 = FqmSubspace.from_rows(amb, [[1, 0]])
    V2 = FqmSubspace.from_rows(amb, [[0, 1]])
    return sb.StrongSubspaceDesign(amb, [V1, V2])


def test_verify_strong_basics(strong_f4):
    assert sb.verify_strong(strong_f4, 1) == 1
    amb = strong_f4.ambient
    full = FqmSubspace.from_rows(amb, np.eye(2, dtype=int))
    assert sb.verify_strong(sb.StrongSubspaceDesign(amb, [full]), 1) == 1
    point = FqmSubspace.from_rows(amb, [[1, 0]])
    assert sb.verify_strong(sb.StrongSubspaceDesign(amb, [point]), 1) == 1


def test_cameron_liebler_point_pencil():
    S, pred = sb.cameron_liebler("point_pencil", 1, 3, 2)
    assert S.t == 7 and pred == {"x": 1, "w": [6, 0], "w_prime": [3, 4], "A": 8}
    assert sb.verify_strong(S, 2) == 8  # exhaustive sweep of all 35 lines


def test_cameron_liebler_other_kinds():
    S, pred = sb.cameron_liebler("in_hyperplane", 1, 3, 2)
    assert S.t == 7 and pred["x"] == 1
    assert sb.verify_strong(S, 2) == pred["A"] == 8
    S, pred = sb.cameron_liebler("mixed", 1, 3, 2)
    assert pred["x"] == 2 and sb.verify_strong(S, 2) == pred["A"]
    S, pred = sb.cameron_liebler("complement", 1, 3, 2, params={"of": "point_pencil"})
    assert pred["x"] == 2**2 + 1 - 1 == 4
    assert sb.verify_strong(S, 2) == pred["A"]
    S, pred = sb.cameron_liebler("union", 1, 3, 2, params={"of": ["point_pencil", "in_hyperplane"]})
    assert pred["x"] == 2
    with pytest.raises(BadParameters):
        sb.cameron_liebler("point_pencil", 1, 2, 2)  # k < 2n+1


def test_cameron_liebler_q3():
    S, pred = sb.cameron_liebler("point_pencil", 1, 3, 3)
    assert pred["x"] == 1 and S.t == 13
    assert sb.verify_strong(S, 2) == pred["A"]


def test_evasive_intersect(strong_f4):
    t = strong_f4.ambient.tower
    amb = strong_f4.ambient
    one, zero = t.one(), t.zero()
    E = span_fq(amb, [(one, zero), (zero, one)])  # scattered F_2^2
    out = sb.evasive_intersect(strong_f4, E, 1, 1)
    assert de.design_profile(out, 1).A_min <= 1
    full = FqSubspace.from_expanded_rows(amb, np.eye(4, dtype=int))
    out2 = sb.evasive_intersect(strong_f4, full, t.m, 1)  # identity intersection
    assert out2.dims == (2, 2)
    with pytest.raises(NotEvasive):
        sb.evasive_intersect(strong_f4, E, "1/2", 1)
    # dimension floor: dim U_i >= m k_i - km + dim E
    for U, V in zip(out.members, strong_f4.members):
        assert U.dim >= t.m * V.dim - t.m * amb.k + E.dim


def test_intermediate_field(strong_f4):
    out = sb.intermediate_field_design(strong_f4, 4, 1, A=1)
    assert out.ambient.tower.order == 16 and out.dims == (2, 2)
    # sweep of the 17 points of PG(1,16): a sharp (1, mA) = (1, 2) design
    assert de.design_profile(out, 1).A_min == 2
    boundary = sb.intermediate_field_design(strong_f4, 2, 1, A=1)
    assert boundary.ambient.tower is strong_f4.ambient.tower
    with pytest.raises(NotAMultiple):
        sb.intermediate_field_design(strong_f4, 3, 1)


def test_places_embed():
    t = make_tower(2, 2, 3)  # q = 4, m = 3
    p = [1, 1, 0, 1]  # y^3 + y + 1, irreducible over F_4, moved by tau
    assert poly_is_irreducible(t.fq, p)
    D = sb.places_embed(t, [[[1], [0, 1]]], p, 2, 2)
    assert D.dims == (2,)  # injectivity: dim preserved
    D1 = sb.places_embed(t, [[[1]]], p, 2, 2)
    vec = D1.ambient.contract(D1.members[0].basis)[0]
    assert list(vec) == [1, 1]  # constants map to (1, ..., 1)
    with pytest.raises(PlacesCollide):
        sb.places_embed(t, [[[1]]], [2, 0, 0, 1], 2, 2)  # y^3 + c is tau-invariant
    with pytest.raises(DegreeTooLarge):
        sb.places_embed(t, [[[0] * 6 + [1]]], p, 2, 2)
    with pytest.raises(NotIrreducible):
        sb.places_embed(t, [[[1]]], [0, 0, 0, 1], 2, 2)  # y^3 is reducible
    with pytest.raises(BadParameters):
        sb.places_embed(t, [[[1]]], [1, 1, 0, 0, 1], 2, 2)  # degree != m


def test_places_injectivity_larger_space():
    t = make_tower(2, 2, 3)
    p = [1, 1, 0, 1]
    gens = [[1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0, 1]]  # all of F_4[x]_{<5}
    D = sb.places_embed(t, [gens], p, 2, 2)
    assert D.dims == (5,)
