import numpy as np
import pytest
from hypothesis import given, strategies as st

from subdesigns.errors import DivisionByZero, NotInBaseField, NotIrreducible, NotPrime, TowerMismatch
from subdesigns.gf import FFElement, field_arith, frobenius, make_tower, norm_trace

# towers swept exhaustively where the contracts ask for it (q^m <= 3^6)
SWEEP = [(2, 1, 2), (2, 1, 3), (2, 1, 4), (2, 1, 5), (2, 1, 6),
         (3, 1, 2), (3, 1, 3), (3, 1, 4), (3, 1, 5), (3, 1, 6),
         (2, 2, 2), (2, 2, 3), (2, 2, 4), (5, 1, 2), (5, 1, 3), (5, 1, 4),
         (3, 2, 2), (3, 2, 3), (5, 2, 2)]


def test_make_tower_examples(f4, f9):
    # smallest extension and the standard F_9 modulus
    assert f4.order == 4 and f4.fqm_modulus == (1, 1, 1)
    assert f9.order == 9 and f9.fqm_modulus == (1, 0, 1)
    w = f4.gen()
    assert w * w == f4.element("w+1")
    i = f9.gen()
    assert i * i == -f9.one()


def test_make_tower_rejects_reducible_modulus():
    with pytest.raises(NotIrreducible):
        make_tower(2, 1, 2, fqm_modulus=(1, 0, 1))  # x^2+1 = (x+1)^2 over F_2


def test_make_tower_rejects_composite_characteristic():
    with pytest.raises(NotPrime):
        make_tower(4, 1, 2)


def test_towers_are_cached(f9):
    assert make_tower(3, 1, 2) is f9


def test_field_arith_examples(f4, f9):
    w = f4.gen()
    assert field_arith(w, w, "mul") == f4.element("w+1")
    assert field_arith(w, None, "pow", e=3) == f4.one()
    i1 = f9.element("i+1")
    assert field_arith(i1, i1, "mul") == f9.element("2*i")
    with pytest.raises(DivisionByZero):
        field_arith(f4.one(), f4.zero(), "div")
    with pytest.raises(TowerMismatch):
        field_arith(f4.one(), f9.one(), "add")


def test_frobenius_examples(f4, f9):
    w, i = f4.gen(), f9.gen()
    assert frobenius(w, 1) == w * w == f4.element("w+1")
    assert frobenius(i, 1) == -i  # i^3
    for a in f9.elements():
        assert frobenius(a, 0) == a
        assert frobenius(a, f9.m) == a


def test_norm_trace_examples(f4, f9):
    n, tr = norm_trace(f4.gen())
    assert n == f4.one() and tr == f4.one()
    n, _ = norm_trace(f9.element("i+1"))
    assert n.code == 2
    n, tr = norm_trace(f9.zero())
    assert n == f9.zero() and tr == f9.zero()


def test_norm_by_repeated_multiplication_oracle(f9):
    # oracle: multiply the conjugates one by one
    for a in f9.elements():
        acc = f9.one()
        for j in range(f9.m):
            acc = acc * frobenius(a, j)
        assert norm_trace(a)[0] == acc


@pytest.mark.parametrize("p,h,m", SWEEP)
def test_frobenius_order_and_fixed_field(p, h, m):
    t = make_tower(p, h, m)
    codes = np.arange(t.order)
    x = codes.copy()
    for _ in range(m):
        x = t.frob[x]
    assert np.array_equal(x, codes)  # sigma^m = id on every element
    fixed = int((t.frob[codes] == codes).sum())
    assert fixed == t.q  # sigma fixes exactly F_q


@pytest.mark.parametrize("p,h,m", [(2, 1, 2), (3, 1, 2), (2, 2, 2), (3, 1, 3), (5, 1, 2)])
def test_norm_multiplicative_trace_additive(p, h, m):
    t = make_tower(p, h, m)
    rng = np.random.default_rng(11)
    for _ in range(200):
        a, b = (int(x) for x in rng.integers(0, t.order, 2))
        ab = int(t.fqm.mul(a, b))
        assert t.norm_code(ab) == int(t.fqm.mul(t.norm_code(a), t.norm_code(b)))
        apb = int(t.fqm.add(a, b))
        assert t.trace_code(apb) == int(t.fqm.add(t.trace_code(a), t.trace_code(b)))


@given(st.integers(0, 8), st.integers(0, 8))
def test_ffelement_ring_axioms_f9(a_code, b_code):
    t = make_tower(3, 1, 2)
    a, b = FFElement(t, a_code), FFElement(t, b_code)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a
    if b.code:
        assert (a / b) * b == a


def test_coeffs_round_trip(f9):
    for a in f9.elements():
        assert f9.element(a.coeffs) == a


def test_subfield_membership(f9):
    in_fq = [a.code for a in f9.elements() if a.in_fq()]
    assert in_fq == [0, 1, 2]
    with pytest.raises(NotInBaseField):
        f9.fq_code(f9.gen().code)


def test_string_parsing(f9, f4):
    assert f9.element("i+1").code == f9.element("1+y").code
    assert f9.element("-1").code == 2
    assert f9.element("2*i+2") == f9.element("2*y") + f9.element(2)
    assert f4.element("w^2") == f4.gen() * f4.gen()
