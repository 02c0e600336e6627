"""Subspace designs: construction, brute-force certification, dualities, cutting.

A design is an ordered tuple (U_1, ..., U_t) of F_q-subspaces of
V = F_{q^m}^k.  Certification is exact enumeration: the profile at s is
the true maximum of sum_i dim_q(U_i meet W) over all s-dimensional
F_{q^m}-subspaces W, with a maximising witness (ties broken by
enumeration order).  Two fast paths cover the interesting ends: s = 1
through the members' linear sets, s = k-1 through a sweep of canonical
hyperplane normal vectors using the rank identity
dim_q(U meet x^perp) = dim U - rk_q(x G).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from subdesigns import linalg
from subdesigns.config import DEFAULT_ENUMERATION_CAP
from subdesigns.errors import (
    AmbientMismatch,
    BadExponent,
    BadPartition,
    DualSpanTooSmall,
    EnumerationCapExceeded,
    EtaInNormGroup,
    GcdViolation,
    IncrementTooLarge,
    MixedParameters,
    NormClash,
    NotABasis,
    TooFewBlocks,
    TooManyBlocks,
)
from subdesigns.fieldcore import DTYPE, SmallField, find_irreducible
from subdesigns.gf import FFElement, FieldTower
from subdesigns.subspace import (
    AmbientSpace,
    FqSubspace,
    FqmSubspace,
    enumerate_fqm_subspaces,
    hyperplane_normals,
    hyperplane_subspace,
    linear_set,
    meet_join,
    ordinary_dual,
    span_fq,
    subspace_count,
)


class SubspaceDesign:
    """Ordered tuple of F_q-subspaces sharing one ambient space."""

    def __init__(self, ambient: AmbientSpace, members):
        members = tuple(members)
        if not members:
            raise ValueError("a design needs at least one member")
        for U in members:
            if U.ambient != ambient:
                raise AmbientMismatch("member from a different ambient")
        self.ambient = ambient
        self.members = members
        self._gen_blocks = None
        self._linear_sets = None

    @property
    def t(self) -> int:
        return len(self.members)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(U.dim for U in self.members)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceDesign)
            and other.ambient == self.ambient
            and other.members == self.members
        )

    def __repr__(self) -> str:
        return f"SubspaceDesign(t={self.t}, dims={list(self.dims)}, ambient={self.ambient})"

    def gen_blocks(self) -> list[np.ndarray]:
        if self._gen_blocks is None:
            self._gen_blocks = [U.gen_block() for U in self.members]
        return self._gen_blocks

    def member_linear_sets(self, cap: int | None = DEFAULT_ENUMERATION_CAP):
        if self._linear_sets is None:
            self._linear_sets = [
                linear_set(U, cap=cap) if U.dim else None for U in self.members
            ]
        return self._linear_sets

    def span_dim(self) -> int:
        rows = [U.basis for U in self.members if U.dim]
        if not rows:
            return 0
        stacked = np.vstack(rows)
        return linalg.rank(self.ambient.tower.fqm, self.ambient.contract(stacked))


@dataclass
class DesignProfile:
    """Exact answer to: what is the smallest A making this an (s, A) design?"""

    s: int
    A_min: int
    span_dim: int
    witness: FqmSubspace
    non_degenerate: bool


def _point_sort_key(point: tuple) -> tuple:
    lead = next(i for i, c in enumerate(point) if c)
    return (lead, point[lead + 1 :])


def hyperplane_profile_sums(
    D: SubspaceDesign, cap: int | None = DEFAULT_ENUMERATION_CAP, threads: int = 1
) -> np.ndarray:
    """sum_i dim_q(U_i meet H) for every hyperplane, aligned with hyperplane_normals."""
    amb = D.ambient
    t = amb.tower
    normals = hyperplane_normals(amb)
    B = normals.shape[0]
    if cap is not None and B > cap:
        raise EnumerationCapExceeded(f"{B} hyperplanes exceed cap {cap}")
    sums = np.zeros(B, dtype=np.int64)
    blocks = D.gen_blocks()

    def work(lo: int, hi: int) -> None:
        for U, G in zip(D.members, blocks):
            if U.dim == 0:
                continue
            Y = linalg.matmul(t.fqm, normals[lo:hi], G)
            digs = t.fqm.to_digits(Y)  # (hi-lo, n_i, m)
            n_i = U.dim
            for b in range(hi - lo):
                sums[lo + b] += n_i - linalg.rank(t.fq, digs[b])

    if threads <= 1 or B < 256:
        work(0, B)
    else:
        step = (B + threads - 1) // threads
        with ThreadPoolExecutor(max_workers=threads) as ex:
            list(ex.map(lambda i: work(i, min(i + step, B)), range(0, B, step)))
    return sums


def _profile_points(D: SubspaceDesign, cap) -> tuple[int, FqmSubspace]:
    """Fast s=1 path via member linear sets."""
    amb = D.ambient
    totals: dict[tuple, int] = {}
    for ls in D.member_linear_sets(cap=cap):
        if ls is None:
            continue
        for pt, w in ls.entries.items():
            totals[pt] = totals.get(pt, 0) + w
    if not totals:
        witness = next(enumerate_fqm_subspaces(amb, 1, cap=cap))
        return 0, witness
    best = max(totals.values())
    pick = min((pt for pt, v in totals.items() if v == best), key=_point_sort_key)
    return best, FqmSubspace.from_rows(amb, [list(pick)])


def design_profile(
    D: SubspaceDesign,
    s: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> DesignProfile:
    """Exact maximum intersection total over all s-dimensional F_{q^m}-subspaces."""
    amb = D.ambient
    k = amb.k
    if not 1 <= s <= k:
        raise ValueError(f"s must lie in [1, {k}]")
    span = D.span_dim()
    if s == k:
        best, witness = D.total_dim, FqmSubspace.from_rows(amb, np.eye(k, dtype=DTYPE))
    elif s == 1:
        best, witness = _profile_points(D, cap)
    elif s == k - 1:
        sums = hyperplane_profile_sums(D, cap=cap, threads=threads)
        idx = int(np.argmax(sums))
        best = int(sums[idx])
        witness = hyperplane_subspace(amb, hyperplane_normals(amb)[idx])
    else:
        count = subspace_count(amb, s)
        if cap is not None and count > cap:
            raise EnumerationCapExceeded(f"{count} subspaces of dim {s} exceed cap {cap}")
        best, witness = -1, None
        for W in enumerate_fqm_subspaces(amb, s, cap=cap):
            Wfq = W.expand_fq()
            total = sum(meet_join(U, Wfq)[0].dim for U in D.members if U.dim)
            if total > best:
                best, witness = total, W
    if span >= s:
        assert best >= s, "every design with span >= s meets some W in total >= s"
    return DesignProfile(s=s, A_min=best, span_dim=span, witness=witness, non_degenerate=span == k)


def is_s_design(profile: DesignProfile) -> bool:
    return profile.span_dim >= profile.s and profile.A_min == profile.s


def max_design_dim(tower: FieldTower, k: int, s: int) -> int | None:
    mk = tower.m * k
    return mk // (s + 1) if tower.m >= s + 1 and mk % (s + 1) == 0 else None


def classify(
    D: SubspaceDesign,
    max_s: int | None = None,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> dict:
    """Design-hood, maximality, monotonicity, bound bookkeeping for s = 1..max_s."""
    amb = D.ambient
    t = amb.tower
    k = amb.k
    max_s = k - 1 if max_s is None else min(max_s, k - 1)
    report: dict = {"dims": list(D.dims), "t": D.t, "per_s": {}}
    design_flags = {}
    for s in range(1, max_s + 1):
        prof = design_profile(D, s, cap=cap, threads=threads)
        flag = is_s_design(prof)
        design_flags[s] = flag
        target = max_design_dim(t, k, s)
        is_max = flag and target is not None and all(d == target for d in D.dims)
        if is_max:
            assert prof.non_degenerate, "maximum designs must span the whole space"
        if flag and t.m >= s + 1:
            assert all((s + 1) * d <= t.m * k for d in D.dims), "dimension bound violated"
        report["per_s"][s] = {
            "A_min": prof.A_min,
            "span_dim": prof.span_dim,
            "is_design": flag,
            "is_maximum": is_max,
        }
    # monotonicity: an s-design is an i-design for every i <= s
    mono_ok = True
    top = max((s for s, f in design_flags.items() if f), default=0)
    for i in range(1, top + 1):
        if not design_flags.get(i, False):
            mono_ok = False
    report["monotonicity_ok"] = mono_ok
    assert mono_ok, "monotonicity of designs violated; enumeration is broken"

    # t-bound for maximum 1-designs
    if report["per_s"].get(1, {}).get("is_maximum"):
        q, m = t.q, t.m
        mk = m * k
        lhs = D.t * (q**m - 1)
        rhs = (q - 1) * (q ** (mk // 2) + 1)
        report["max1_t_bound"] = {
            "t": D.t,
            "bound_num": rhs,
            "bound_den": q**m - 1,
            "satisfied": lhs <= rhs,
            "saturated": lhs == rhs,
        }
        assert lhs <= rhs, "maximum 1-design exceeds the block-count bound"

    # equal-dimension (k-1, A) bounds: n <= m + A/t - 1 and tn <= tm + A - k + 1
    if (
        len(set(D.dims)) == 1
        and D.dims[0] >= t.m
        and (k - 1) in report["per_s"]
        and report["per_s"][k - 1]["span_dim"] >= k - 1
    ):
        A = report["per_s"][k - 1]["A_min"]
        n = D.dims[0]
        entry = {"A": A, "n": n}
        if A < D.t * t.m * (k - 1):
            # n < m + A/t, i.e. tn <= tm + A - 1 (sharp when t divides A)
            entry["n_bound"] = (t.m * D.t + A - 1) // D.t
            assert n * D.t <= t.m * D.t + A - 1, "equal-dims bound (1) violated"
        if A * (k - 1) < D.t * t.m + (k - 2) * (k - 1):
            entry["tn_bound"] = D.t * t.m + A - k + 1
            assert D.t * n <= D.t * t.m + A - k + 1, "equal-dims bound (2) violated"
        report["equal_dims_bounds"] = entry

    # optimality through the sum-rank Singleton bound (hyperplane regime)
    dims = sorted(D.dims, reverse=True)
    applicable = all(d <= t.m for d in dims) or (
        len(set(dims)) == 1 and dims[0] >= t.m
    )
    if applicable and all(d > 0 for d in dims) and D.span_dim() == k:
        from subdesigns import sumrank

        code = sumrank.code_from_system(D)
        d_min = sumrank.min_distance(code, cap=cap, threads=threads)
        verdict = sumrank.singleton_msrd(code, d=d_min)
        report["optimal"] = {
            "applicable": True,
            "min_distance": d_min,
            "is_msrd": verdict["is_msrd"],
        }
    else:
        report["optimal"] = {"applicable": False}
    return report


# --- constructions -------------------------------------------------------------


def _distinct_norms(tower: FieldTower, codes) -> list[int]:
    norms = [tower.norm_code(c) for c in codes]
    if len(set(norms)) != len(norms) or any(n == 0 for n in norms):
        raise NormClash("twist scalars must be nonzero with pairwise distinct norms")
    return norms


def construct_basis_partition(ambient: AmbientSpace, basis, partition) -> SubspaceDesign:
    """Members spanned over F_q by the blocks of a partition of an F_{q^m}-basis."""
    vecs = []
    for vec in basis:
        vecs.append([e.code if isinstance(e, FFElement) else int(e) for e in vec])
    M = np.asarray(vecs, dtype=DTYPE)
    k = ambient.k
    if M.shape != (k, k) or linalg.rank(ambient.tower.fqm, M) != k:
        raise NotABasis("need k independent vectors over F_{q^m}")
    blocks = [list(block) for block in partition]
    flat = sorted(i for block in blocks for i in block)
    if len(blocks) < 2 or any(not block for block in blocks) or flat != list(range(1, k + 1)):
        raise BadPartition("partition must have >= 2 nonempty disjoint blocks covering 1..k")
    members = [span_fq(ambient, [M[i - 1] for i in block]) for block in blocks]
    return SubspaceDesign(ambient, members)


def _block_field_elements(block) -> list[int]:
    """An F_q-basis (codes) of a subspace of F_{q^m} given as a k=1 FqSubspace."""
    amb = block.ambient
    if amb.k != 1:
        raise ValueError("blocks must be subspaces of F_{q^m} itself (k = 1 ambient)")
    return [int(c) for c in amb.contract(block.basis).reshape(-1)]


def full_field_block(tower: FieldTower) -> FqSubspace:
    """F_{q^m} as an F_q-subspace of itself (the standard block for max designs)."""
    amb1 = AmbientSpace(tower, 1)
    gen = tower.q if tower.m > 1 else 0
    vecs = [[int(tower.fqm.pow(gen, j)) if tower.m > 1 else 1] for j in range(tower.m)]
    return span_fq(amb1, vecs)


def construct_twisted(
    ambient: AmbientSpace,
    alphas,
    eta,
    blocks,
    s_exp: int = 1,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> SubspaceDesign:
    """The twisted evaluation construction of (k-1)-designs.

    Member i is the image of the block S_i under
    x -> (x + eta N^k(a_i) sigma^k(x), sigma(x) N^1(a_i), ..., sigma^(k-1)(x) N^(k-1)(a_i));
    eta = 0 recovers the linearized Reed-Solomon designs.
    """
    t = ambient.tower
    k = ambient.k
    alpha_codes = [a.code if isinstance(a, FFElement) else int(a) for a in alphas]
    eta_code = eta.code if isinstance(eta, FFElement) else int(eta)
    if len(alpha_codes) >= t.q:
        raise TooManyBlocks(f"need t < q = {t.q}")
    norms = _distinct_norms(t, alpha_codes)
    if gcd(s_exp, t.m) != 1:
        raise BadExponent("sigma exponent must be coprime to m")
    block_bases = [_block_field_elements(b) for b in blocks]
    if len(block_bases) != len(alpha_codes):
        raise ValueError("one block per alpha")
    if sum(len(b) for b in block_bases) < k:
        raise TooFewBlocks("total block dimension must be at least k")
    if eta_code != 0:
        # norm subgroup generated by the alpha norms inside F_q^*
        group = {1}
        frontier = [1]
        while frontier:
            x = frontier.pop()
            for n in norms:
                y = int(t.fq.mul(x, n))
                if y not in group:
                    group.add(y)
                    frontier.append(y)
        sign = int(t.fq.pow(t.p - 1, k * t.m))
        val = int(t.fq.mul(sign, t.fq_code(t.norm_code(eta_code))))
        if val in group:
            raise EtaInNormGroup("(-1)^{km} N(eta) lies in the norm subgroup")

    def image(x: int, alpha: int) -> list[int]:
        row = []
        first = x
        if eta_code:
            nk = t.nsigma_code(alpha, k, s_exp)
            first = int(t.fqm.add(x, int(t.fqm.mul(eta_code, int(t.fqm.mul(nk, t.frobenius_code(x, s_exp * k)))))))
        row.append(first)
        for j in range(1, k):
            nj = t.nsigma_code(alpha, j, s_exp)
            row.append(int(t.fqm.mul(nj, t.frobenius_code(x, s_exp * j))))
        return row

    members = []
    for alpha, base in zip(alpha_codes, block_bases):
        U = span_fq(ambient, [image(x, alpha) for x in base])
        assert U.dim == len(base), "the evaluation map must be injective on the block"
        members.append(U)
    D = SubspaceDesign(ambient, members)
    prof = design_profile(D, k - 1, cap=cap, threads=threads)
    assert prof.A_min <= k - 1, "twisted construction failed its (k-1)-design certificate"
    return D


def construct_pseudoregulus(
    ambient: AmbientSpace,
    s_exp: int,
    mus,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> SubspaceDesign:
    """Members {(x_1, mu_i x_1^(q^s), ..., x_r, mu_i x_r^(q^s))}; maximum 1-design."""
    t = ambient.tower
    k = ambient.k
    if k % 2:
        raise ValueError("pseudoregulus needs an even ambient dimension k = 2r")
    r = k // 2
    if gcd(s_exp, t.m) != 1:
        raise BadExponent("exponent must be coprime to m")
    mu_codes = [u.code if isinstance(u, FFElement) else int(u) for u in mus]
    _distinct_norms(t, mu_codes)
    gen = t.q if t.m > 1 else 0
    members = []
    for mu in mu_codes:
        vecs = []
        for slot in range(r):
            for j in range(t.m):
                x = int(t.fqm.pow(gen, j)) if t.m > 1 else 1
                vec = [0] * k
                vec[2 * slot] = x
                vec[2 * slot + 1] = int(t.fqm.mul(mu, t.frobenius_code(x, s_exp)))
                vecs.append(vec)
        U = span_fq(ambient, vecs)
        assert U.dim == r * t.m
        members.append(U)
    D = SubspaceDesign(ambient, members)
    certify_max_1_design(D, cap=cap)
    sets = D.member_linear_sets(cap=cap)
    seen: set = set()
    for ls in sets:
        pts = set(ls.entries)
        assert not (pts & seen), "pseudoregulus linear sets must be pairwise disjoint"
        seen |= pts
    return D


def certify_max_1_design(D: SubspaceDesign, cap: int | None = DEFAULT_ENUMERATION_CAP) -> DesignProfile:
    t = D.ambient.tower
    mk = t.m * D.ambient.k
    assert mk % 2 == 0 and all(d == mk // 2 for d in D.dims), "members must have dim mk/2"
    prof = design_profile(D, 1, cap=cap)
    assert is_s_design(prof) and prof.non_degenerate, "maximum 1-design certificate failed"
    return prof


def direct_sum(designs, s: int | None = None, cap: int | None = DEFAULT_ENUMERATION_CAP) -> SubspaceDesign:
    """Member-wise direct sum; optionally re-certifies an s-design claim."""
    designs = list(designs)
    if not designs:
        raise MixedParameters("nothing to sum")
    tower = designs[0].ambient.tower
    t_count = designs[0].t
    for D in designs:
        if D.ambient.tower is not tower or D.t != t_count:
            raise MixedParameters("summands need one tower and equal t")
    k = sum(D.ambient.k for D in designs)
    amb = AmbientSpace(tower, k)
    members = []
    for i in range(t_count):
        rows = []
        offset = 0
        for D in designs:
            U = D.members[i]
            sub_k = D.ambient.k
            for row in U.ambient.contract(U.basis):
                vec = [0] * k
                vec[offset : offset + sub_k] = [int(c) for c in row]
                rows.append(vec)
            offset += sub_k
        members.append(span_fq(amb, rows))
    out = SubspaceDesign(amb, members)
    assert out.dims == tuple(sum(D.dims[i] for D in designs) for i in range(t_count))
    if s is not None:
        prof = design_profile(out, s, cap=cap)
        assert is_s_design(prof), "direct sum lost the s-design property"
        target = max_design_dim(tower, k, s)
        if target is not None and all(d == target for d in out.dims):
            assert prof.non_degenerate
    return out


def construct_field_partition(q: int, m: int, k: int, cap: int | None = DEFAULT_ENUMERATION_CAP) -> SubspaceDesign:
    """Subgeometry-partition 1-design via multiplicative cosets in F_{q^{mk}}.

    Identifies F_{q^{mk}} with F_{q^m}^k through the basis 1, z, ..., z^(k-1)
    for the lexicographically smallest degree-k modulus over F_{q^m};
    members are c F_{q^k} for coset representatives c = g^0, g^1, ... of
    F_{q^k}^* F_{q^m}^* in F_{q^{mk}}^*.
    """
    if gcd(k, m) != 1:
        raise GcdViolation("subgeometry partitions need gcd(k, m) = 1")
    # locate the tower for F_q: q = p^h with our supported shapes
    p, h = _prime_power(q)
    from subdesigns.gf import make_tower

    tower = make_tower(p, h, m)
    amb = AmbientSpace(tower, k)
    big = SmallField(p, tower.fqm, find_irreducible(tower.fqm, k)) if k > 1 else tower.fqm
    Q = big.size
    g = big.generator_code
    e_k = (Q - 1) // (q**k - 1)
    e_m = (Q - 1) // (q**m - 1)
    t_count = gcd(e_k, e_m)
    expected = (q ** (m * k) - 1) * (q - 1) // ((q**k - 1) * (q**m - 1))
    assert t_count == expected, "coset index does not match the closed form"
    subfield = [0] + [int(big.pow(g, e_k * j)) for j in range(q**k - 1)]
    coords = (lambda e: big.to_digits(e)) if k > 1 else (lambda e: [e])
    members = []
    rep = 1
    for _ in range(t_count):
        vecs = [coords(int(big.mul(rep, u))) for u in subfield if u]
        U = span_fq(amb, vecs)
        assert U.dim == k
        members.append(U)
        rep = int(big.mul(rep, g))
    D = SubspaceDesign(amb, members)
    # partition check: every projective point covered exactly once
    totals: dict[tuple, int] = {}
    for ls in D.member_linear_sets(cap=cap):
        for pt, w in ls.entries.items():
            totals[pt] = totals.get(pt, 0) + w
    n_points = (q ** (m * k) - 1) // (q**m - 1)
    assert len(totals) == n_points and all(v == 1 for v in totals.values()), (
        "subgeometries failed to partition the point set"
    )
    return D


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            h = 0
            while q % p == 0:
                q //= p
                h += 1
            if q != 1:
                raise ValueError("q must be a prime power")
            return p, h
    raise ValueError("q must be >= 2")


def enlarge(
    D: SubspaceDesign,
    s: int,
    increments,
    profile: DesignProfile | None = None,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> SubspaceDesign:
    """Grow members by deterministic extra vectors; (s, A) becomes (s, A + sum j_i)."""
    amb = D.ambient
    F = amb.tower.fq
    increments = list(increments)
    if len(increments) != D.t:
        raise ValueError("one increment per member")
    if any(j < 0 or j > amb.n_fq - U.dim for j, U in zip(increments, D.members)):
        raise IncrementTooLarge("increments must fit inside the ambient dimension")
    if profile is None:
        profile = design_profile(D, s, cap=cap)
    members = []
    for U, j in zip(D.members, increments):
        basis = U.basis
        added = 0
        col = 0
        while added < j:
            vec = np.zeros(amb.n_fq, dtype=DTYPE)
            vec[col] = 1
            col += 1
            R, piv = linalg.rref(F, np.vstack([basis, vec.reshape(1, -1)]) if basis.shape[0] else vec.reshape(1, -1))
            if R.shape[0] > basis.shape[0]:
                basis = R
                added += 1
        members.append(FqSubspace(amb, basis, linalg.rref(F, basis)[1] if basis.shape[0] else []))
    out = SubspaceDesign(amb, members)
    new_prof = design_profile(out, s, cap=cap)
    assert new_prof.A_min <= profile.A_min + sum(increments), "enlargement bound violated"
    return out


def dual_design(
    D: SubspaceDesign,
    s: int,
    A: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> SubspaceDesign:
    """Member-wise ordinary dual; declared as a (k-s, A + t(k-s)m - N) design."""
    amb = D.ambient
    k = amb.k
    duals = [ordinary_dual(U) for U in D.members]
    out = SubspaceDesign(amb, duals)
    if out.span_dim() < k - s:
        raise DualSpanTooSmall("dual members span too little for the duality statement")
    declared = A + D.t * (k - s) * amb.tower.m - D.total_dim
    prof = design_profile(out, k - s, cap=cap)
    assert prof.A_min <= declared, "ordinary duality parameter bound violated"
    mk = amb.tower.m * k
    if mk % 2 == 0 and all(d == mk // 2 for d in D.dims):
        if is_s_design(design_profile(D, 1, cap=cap)):
            certify_max_1_design(out, cap=cap)
    return out


def hyperplane_weight_distribution(
    D: SubspaceDesign,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> dict[int, int]:
    """Histogram c -> #{H : sum_i dim(U_i meet H) = c} over all hyperplanes.

    For a maximum 1-design the histogram is checked on the spot against
    the two-point support and the closed-form counts.
    """
    sums = hyperplane_profile_sums(D, cap=cap, threads=threads)
    vals, counts = np.unique(sums, return_counts=True)
    hist = {int(v): int(c) for v, c in zip(vals, counts)}
    t = D.ambient.tower
    k = D.ambient.k
    mk = t.m * k
    if mk % 2 == 0 and all(d == mk // 2 for d in D.dims) and D.span_dim() == k:
        lo = D.t * t.m * (k - 2) // 2
        if max(hist) <= lo + 1:
            # by the hyperplane characterization this IS a maximum 1-design
            h0, h1 = h_values(t.q, t.m, k, D.t)
            assert set(hist) <= {lo, lo + 1}
            assert hist.get(lo, 0) == h0 and hist.get(lo + 1, 0) == h1, (
                f"histogram {hist} does not match the closed form (h0={h0}, h1={h1})"
            )
    return hist


def h_values(q: int, m: int, k: int, t: int) -> tuple[int, int]:
    """Closed-form counts (h0, h1) of low/high hyperplanes of a maximum 1-design."""
    if (m * k) % 2:
        raise ValueError("mk must be even")
    mk2 = m * k // 2
    mkm2 = m * (k - 2) // 2
    num = t * ((q**mk2 - 1) * (q ** (m * (k - 1)) - 1) - (q**mkm2 - 1) * (q ** (m * k) - 1))
    den = (q**m - 1) * (q - 1) * q**mkm2
    assert num % den == 0, "h1 closed form must be an integer"
    h1 = num // den
    h0 = (q ** (m * k) - 1) // (q**m - 1) - h1
    return h0, h1


@dataclass
class CuttingReport:
    cutting: bool
    witness: FqmSubspace | None
    intersection_constant: bool
    constant_value: int | None


def is_cutting(
    D: SubspaceDesign,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> CuttingReport:
    """Do the members' hyperplane sections always span the hyperplane?

    Also reports whether the total section dimension is constant across
    hyperplanes (a sufficient condition, cross-checked when it holds).
    The witness, when any, is the first violating hyperplane in
    enumeration order regardless of the thread count.
    """
    amb = D.ambient
    t = amb.tower
    k = amb.k
    normals = hyperplane_normals(amb)
    B = normals.shape[0]
    if cap is not None and B > cap:
        raise EnumerationCapExceeded(f"{B} hyperplanes exceed cap {cap}")
    blocks = D.gen_blocks()
    sums = np.zeros(B, dtype=np.int64)
    bad = np.zeros(B, dtype=bool)

    def work(lo: int, hi: int) -> None:
        for b in range(lo, hi):
            x = normals[b]
            section_rows = []
            total = 0
            for U, G in zip(D.members, blocks):
                if U.dim == 0:
                    continue
                xg = linalg.vecmat(t.fqm, x, G)
                cond = t.fqm.to_digits(xg).T  # m x n_i conditions over F_q
                ker = linalg.right_kernel(t.fq, cond)
                total += ker.shape[0]
                if ker.shape[0]:
                    section_rows.append(linalg.matmul(t.fq, ker, U.basis))
            sums[b] = total
            if section_rows:
                stacked = amb.contract(np.vstack(section_rows))
                span_rank = linalg.rank(t.fqm, stacked)
            else:
                span_rank = 0
            bad[b] = span_rank != k - 1

    if threads <= 1 or B < 256:
        work(0, B)
    else:
        step = (B + threads - 1) // threads
        with ThreadPoolExecutor(max_workers=threads) as ex:
            list(ex.map(lambda lo: work(lo, min(lo + step, B)), range(0, B, step)))

    hits = np.nonzero(bad)[0]
    witness = hyperplane_subspace(amb, normals[int(hits[0])]) if hits.size else None
    constant = len(np.unique(sums)) == 1
    if constant and sums[0] > 0:
        assert witness is None, "constant positive intersection must imply cutting"
    return CuttingReport(
        cutting=witness is None,
        witness=witness,
        intersection_constant=constant,
        constant_value=int(sums[0]) if constant else None,
    )
