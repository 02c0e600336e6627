"""Strong subspace designs and the four bridges down to ordinary designs.

Strong designs here carry F_{q^m}-subspace members and are measured
against F_{q^m}-subspaces with top-field dimensions (the form in which
they are consumed by the conversions).  The bridges:

* intersect with a subspace-evasive F_q-subspace,
* reinterpret over an intermediate field F_q < F_{q^m} < F_{q^c},
* embed polynomial spaces through residues at an orbit of high-degree
  places p, tau p, ..., tau^(k-1) p,
* read off Cameron-Liebler sets of projective n-spaces.

Every conversion re-certifies its advertised design parameters by
brute-force profile at desk scale.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from subdesigns import linalg
from subdesigns.config import DEFAULT_ENUMERATION_CAP
from subdesigns.design import SubspaceDesign, design_profile
from subdesigns.errors import (
    AmbientMismatch,
    BadParameters,
    DegreeTooLarge,
    EnumerationCapExceeded,
    NotAMultiple,
    NotEvasive,
    NotIrreducible,
    PlacesCollide,
    SpanTooSmall,
)
from subdesigns.fieldcore import DTYPE, poly_eval, poly_is_irreducible, poly_monic, poly_trim
from subdesigns.gf import FieldTower, make_tower
from subdesigns.subspace import (
    AmbientSpace,
    FqmSubspace,
    FqSubspace,
    enumerate_fqm_subspaces,
    gaussian_binomial,
    meet_join,
    span_fq,
    subspace_count,
)


class StrongSubspaceDesign:
    """Ordered tuple of F_{q^m}-subspaces of one ambient space."""

    def __init__(self, ambient: AmbientSpace, members):
        members = tuple(members)
        if not members:
            raise ValueError("a strong design needs at least one member")
        for V in members:
            if V.ambient != ambient:
                raise AmbientMismatch("member from a different ambient")
        self.ambient = ambient
        self.members = members

    @property
    def t(self) -> int:
        return len(self.members)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(V.dim for V in self.members)

    def __repr__(self) -> str:
        return f"StrongSubspaceDesign(t={self.t}, dims={list(self.dims)}, ambient={self.ambient})"


def verify_strong(
    S: StrongSubspaceDesign,
    s: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> int:
    """Exact max of sum_i dim(V_i meet W) over s-dimensional F_{q^m}-subspaces W."""
    amb = S.ambient
    F = amb.tower.fqm
    count = subspace_count(amb, s)
    if cap is not None and count > cap:
        raise EnumerationCapExceeded(f"{count} subspaces exceed cap {cap}")
    best = 0
    for W in enumerate_fqm_subspaces(amb, s, cap=cap):
        total = 0
        for V in S.members:
            if V.dim:
                total += linalg.intersect_rowspaces(F, V.basis, W.basis).shape[0]
        best = max(best, total)
    return best


def _max_meet_dim(E: FqSubspace, h: int, cap) -> int:
    """max over h-dimensional F_{q^m}-subspaces W of dim_q(E meet W)."""
    best = 0
    for W in enumerate_fqm_subspaces(E.ambient, h, cap=cap):
        best = max(best, meet_join(E, W.expand_fq())[0].dim)
    return best


def evasive_intersect(
    S: StrongSubspaceDesign,
    E: FqSubspace,
    c,
    s: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> SubspaceDesign:
    """Members V_i meet E for an (h, ch)-evasive E; an (s, cA) design."""
    if E.ambient != S.ambient:
        raise AmbientMismatch("E must live in the strong design's ambient")
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    for h in range(1, s + 1):
        worst = _max_meet_dim(E, h, cap)
        if worst > c * h:
            raise NotEvasive(f"E meets an {h}-dimensional subspace in dimension {worst} > {c}*{h}")
    t = S.ambient.tower
    members = [meet_join(V.expand_fq(), E)[0] for V in S.members]
    out = SubspaceDesign(S.ambient, members)
    if out.span_dim() < s:
        raise SpanTooSmall("intersections span too little")
    A = verify_strong(S, s, cap=cap)
    prof = design_profile(out, s, cap=cap)
    assert prof.A_min <= c * A, "evasive intersection exceeded the (s, cA) certificate"
    d = E.dim
    for U, V in zip(out.members, S.members):
        assert U.dim >= t.m * V.dim - t.m * S.ambient.k + d, "dimension floor violated"
    return out


def intermediate_field_design(
    S: StrongSubspaceDesign,
    c: int,
    s: int,
    A: int | None = None,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> SubspaceDesign:
    """Reinterpret the members as F_q-subspaces of F_{q^c}^k; an (s, mA) design."""
    t = S.ambient.tower
    if c % t.m:
        raise NotAMultiple(f"c = {c} is not a multiple of m = {t.m}")
    big = make_tower(t.p, t.h, c)
    # embed F_{q^m} into F_{q^c}: send y to the smallest root of its modulus
    root = None
    mod_coeffs = [int(cf) for cf in t.fqm_modulus]  # F_q codes embed as codes < q
    for cand in range(big.order):
        if poly_eval(big.fqm, mod_coeffs, cand) == 0:
            root = cand
            break
    assert root is not None, "the modulus must split in the bigger field"

    def embed(code: int) -> int:
        digits = t.fqm.to_digits(code)
        acc = 0
        for j in reversed(range(t.m)):
            acc = int(big.fqm.add(int(big.fqm.mul(acc, root)), int(digits[j])))
        return acc

    amb_big = AmbientSpace(big, S.ambient.k)
    members = []
    for V in S.members:
        rows_fqm = S.ambient.contract(V.expand_fq().basis)
        rows = [[embed(int(e)) for e in row] for row in rows_fqm]
        U = span_fq(amb_big, rows)
        assert U.dim == t.m * V.dim, "reinterpretation must preserve F_q-dimension"
        members.append(U)
    out = SubspaceDesign(amb_big, members)
    if A is None:
        A = verify_strong(S, s, cap=cap)
    prof = design_profile(out, s, cap=cap)
    assert prof.A_min <= t.m * A, "intermediate-field certificate failed"
    return out


def places_embed(
    tower: FieldTower,
    V_list,
    p_poly,
    zeta,
    k: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> SubspaceDesign:
    """Residue embedding of polynomial spaces at the places p, tau p, ..., tau^(k-1) p.

    tower fixes F_q (coefficients) and F_{q^m} (residue fields, m = deg p);
    zeta is a primitive element of F_q and tau: x -> zeta x.  Members are
    pi(V_i) for pi(f) = (f mod p, ..., f mod tau^(k-1) p) under the fixed
    residue isomorphisms (smallest root of each place in F_{q^m}).
    """
    t = tower
    q = t.q
    fq = t.fq
    p_poly = poly_trim([int(cf) for cf in p_poly])
    m = len(p_poly) - 1
    if m != t.m:
        raise BadParameters(f"p must have degree m = {t.m}")
    if m > q - 1:
        raise BadParameters("the construction needs m <= q - 1")
    if p_poly[-1] != 1:
        p_poly = poly_monic(fq, p_poly)
    if not poly_is_irreducible(fq, p_poly):
        raise NotIrreducible("p must be irreducible over F_q")
    zeta = int(zeta)
    # zeta must generate F_q^*
    seen = set()
    acc = 1
    for _ in range(q - 1):
        acc = int(fq.mul(acc, zeta))
        seen.add(acc)
    if len(seen) != q - 1:
        raise BadParameters("zeta must be a primitive element of F_q")

    places = []
    zpow = 1
    for _ in range(k):
        shifted = [int(fq.mul(cf, int(fq.pow(zpow, i)))) for i, cf in enumerate(p_poly)]
        places.append(tuple(poly_monic(fq, shifted)))
        zpow = int(fq.mul(zpow, zeta))
    if len(set(places)) != k:
        raise PlacesCollide("the places p, tau p, ..., tau^(k-1) p must be distinct")

    roots = []
    for place in places:
        root = None
        for cand in range(t.order):
            if poly_eval(t.fqm, list(place), cand) == 0:
                root = cand
                break
        assert root is not None
        roots.append(root)

    def residues(poly: list[int]) -> list[int]:
        if len(poly) - 1 >= k * m:
            raise DegreeTooLarge(f"polynomials must have degree < km = {k * m}")
        return [poly_eval(t.fqm, poly, r) for r in roots]

    amb = AmbientSpace(t, k)
    members = []
    for gens in V_list:
        gens = [poly_trim([int(cf) for cf in g]) for g in gens]
        if any(len(g) - 1 >= k * m for g in gens):
            raise DegreeTooLarge(f"polynomials must have degree < km = {k * m}")
        padded = (
            np.array([g + [0] * (k * m - len(g)) for g in gens], dtype=DTYPE)
            if gens
            else np.zeros((0, k * m), dtype=DTYPE)
        )
        span_dim_in = linalg.rank(fq, padded)
        U = span_fq(amb, [residues(g) for g in gens])
        assert U.dim == span_dim_in, "the residue map must be injective on F_q[x]_{<km}"
        members.append(U)
    return SubspaceDesign(amb, members)


# --- Cameron-Liebler sets -------------------------------------------------------


def _cl_w(x: int, q: int, n: int, k: int, i: int) -> int:
    """Intersection count w_i for members of a parameter-x Cameron-Liebler set.

    The i = n+1 term carries the vanishing Gaussian binomial (n choose i),
    so the whole product is 0 there despite the 0 denominator in the
    first factor; that reading matches the brute-force sweeps.
    """
    bin2 = gaussian_binomial(n, i, q)
    if bin2 == 0:
        return 0
    part = Fraction(x - 1) * Fraction(q ** (n + 1) - 1, q ** (n - i + 1) - 1) + Fraction(
        q**i * (q ** (k - n) - 1), q**i - 1
    )
    val = part * q ** (i * (i - 1)) * gaussian_binomial(k - n - 1, i - 1, q) * bin2
    assert val.denominator == 1
    return int(val)


def _cl_w_prime(x: int, q: int, n: int, k: int, i: int) -> int:
    return x * gaussian_binomial(k - n - 1, i - 1, q) * gaussian_binomial(n + 1, i, q) * q ** (i * (i - 1))


def cameron_liebler(
    kind: str,
    n: int,
    k: int,
    q: int,
    params: dict | None = None,
    tower: FieldTower | None = None,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> tuple[StrongSubspaceDesign, dict]:
    """A Cameron-Liebler set of projective n-spaces of PG(k, q) as a strong design.

    Kinds: point_pencil (all n-spaces through a fixed point), in_hyperplane
    (all n-spaces inside a fixed hyperplane), mixed (their disjoint union
    for a point off the hyperplane), complement {"of": kind}, union
    {"of": [kind, kind]}.  Returns the member list plus the closed-form
    parameter x, the counts w_i / w'_i and the strong parameter A.
    """
    if k < 2 * n + 1:
        raise BadParameters("Cameron-Liebler sets need k >= 2n + 1")
    if tower is None:
        p, h = _prime_power(q)
        tower = make_tower(p, h, 1)
    if tower.order != q:
        raise BadParameters("tower top field must have q elements")
    amb = AmbientSpace(tower, k + 1)
    total = subspace_count(amb, n + 1)
    if cap is not None and total > cap:
        raise EnumerationCapExceeded(f"{total} candidate subspaces exceed cap {cap}")

    def pencil_pred(point_vec):
        pv = np.asarray(point_vec, dtype=DTYPE)

        def pred(W: FqmSubspace) -> bool:
            return W.contains(pv)

        return pred

    def hyperplane_pred():
        def pred(W: FqmSubspace) -> bool:
            return not np.any(W.basis[:, -1])

        return pred

    e1 = np.zeros(k + 1, dtype=DTYPE)
    e1[0] = 1
    elast = np.zeros(k + 1, dtype=DTYPE)
    elast[-1] = 1

    def base_pred(name: str):
        if name == "point_pencil":
            return pencil_pred(e1), 1
        if name == "in_hyperplane":
            return hyperplane_pred(), 1
        if name == "mixed":
            inner = pencil_pred(elast)
            hyp = hyperplane_pred()

            def pred(W):
                return inner(W) or hyp(W)

            return pred, 2
        raise BadParameters(f"unknown base kind {name!r}")

    params = params or {}
    if kind == "complement":
        inner_pred, inner_x = base_pred(params.get("of", "point_pencil"))
        pred = lambda W: not inner_pred(W)
        predicted_x = q ** (n + 1) + 1 - inner_x
    elif kind == "union":
        # disjoint instances: pencil anchored off the fixed hyperplane
        kinds = params.get("of", ["point_pencil", "in_hyperplane"])
        anchors = {"point_pencil": pencil_pred(elast), "in_hyperplane": hyperplane_pred()}
        if set(kinds) != {"point_pencil", "in_hyperplane"}:
            raise BadParameters("union supports point_pencil plus in_hyperplane")
        p1, p2 = anchors[kinds[0]], anchors[kinds[1]]
        pred = lambda W: p1(W) or p2(W)
        predicted_x = 2
    else:
        pred, predicted_x = base_pred(kind)

    members = [W for W in enumerate_fqm_subspaces(amb, n + 1, cap=cap) if pred(W)]
    if not members:
        raise BadParameters("the requested set is empty")
    S = StrongSubspaceDesign(amb, members)

    denom = gaussian_binomial(k, n, q)
    if len(members) % denom:
        raise BadParameters("set size is not a multiple of (k choose n)_q; the pieces overlap")
    x = len(members) // denom
    assert x == predicted_x, f"parameter came out {x}, predicted {predicted_x}"
    w = [_cl_w(x, q, n, k, i) for i in range(1, n + 2)]
    w_prime = [_cl_w_prime(x, q, n, k, i) for i in range(1, n + 2)]
    A = n + 1 + sum(w[i - 1] * (n + 1 - i) for i in range(1, n + 2))
    return S, {"x": x, "w": w, "w_prime": w_prime, "A": A}


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            h = 0
            while q % p == 0:
                q //= p
                h += 1
            if q != 1:
                raise BadParameters("q must be a prime power")
            return p, h
    raise BadParameters("q must be >= 2")
