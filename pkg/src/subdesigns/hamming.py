"""Associated Hamming codes, two-intersection sets and strongly regular graphs.

The bridge out of the sum-rank world is the multiset union of the
members' linear sets, each point carrying multiplicity
(q^w - 1)/(q - 1) for its weight w.  Weight enumerators of the
associated [N, k] Hamming codes over F_{q^m} are computed hyperplane-
wise (q^m - 1 codewords per hyperplane plus the zero word); the code is
never materialised except as a small-scale oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from subdesigns import linalg
from subdesigns.config import DEFAULT_ENUMERATION_CAP
from subdesigns.design import SubspaceDesign
from subdesigns.errors import EnumerationCapExceeded, NotTwoIntersection, ZeroMember
from subdesigns.fieldcore import DTYPE
from subdesigns.subspace import AmbientSpace, hyperplane_normals


@dataclass
class ProjectiveSystem:
    """Multiset of projective points; keys are canonical representatives."""

    ambient: AmbientSpace
    entries: dict[tuple, int]

    @property
    def length(self) -> int:
        return sum(self.entries.values())

    def point_matrix(self) -> np.ndarray:
        return np.array(sorted(self.entries), dtype=DTYPE) if self.entries else np.zeros((0, self.ambient.k), dtype=DTYPE)

    def multiplicities(self) -> np.ndarray:
        return np.array([self.entries[tuple(p)] for p in sorted(self.entries)], dtype=np.int64)

    def spans(self) -> bool:
        return linalg.rank(self.ambient.tower.fqm, self.point_matrix()) == self.ambient.k


@dataclass
class SrgParams:
    v: int
    K: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        if self.K * (self.K - self.lam - 1) != (self.v - self.K - 1) * self.mu:
            raise AssertionError("SRG feasibility identity violated")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.K, self.lam, self.mu)


def ext_system(D: SubspaceDesign, cap: int | None = DEFAULT_ENUMERATION_CAP) -> ProjectiveSystem:
    """Disjoint union of the members' linear sets with rank multiplicities."""
    if any(U.dim == 0 for U in D.members):
        raise ZeroMember("all members must be nonzero")
    q = D.ambient.tower.q
    entries: dict[tuple, int] = {}
    for ls in D.member_linear_sets(cap=cap):
        for pt, w in ls.entries.items():
            entries[pt] = entries.get(pt, 0) + (q**w - 1) // (q - 1)
    P = ProjectiveSystem(D.ambient, entries)
    assert P.length == sum((q**n - 1) // (q - 1) for n in D.dims)
    return P


def hyperplane_point_counts(
    P: ProjectiveSystem,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
    chunk: int = 512,
) -> np.ndarray:
    """Multiplicity-weighted point count on each hyperplane (normal-vector order)."""
    amb = P.ambient
    F = amb.tower.fqm
    normals = hyperplane_normals(amb)
    B = normals.shape[0]
    if cap is not None and B > cap:
        raise EnumerationCapExceeded(f"{B} hyperplanes exceed cap {cap}")
    pts = P.point_matrix()
    mult = P.multiplicities()
    counts = np.zeros(B, dtype=np.int64)
    if pts.shape[0] == 0:
        return counts

    def work(lo: int) -> None:
        hi = min(lo + chunk, B)
        acc = np.zeros((hi - lo, pts.shape[0]), dtype=DTYPE)
        for c in range(amb.k):
            acc = np.asarray(F.add(acc, F.mul(normals[lo:hi, c, None], pts[None, :, c])), dtype=DTYPE)
        counts[lo:hi] = ((acc == 0) * mult[None, :]).sum(axis=1)

    starts = range(0, B, chunk)
    if threads <= 1:
        for lo in starts:
            work(lo)
    else:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as ex:
            list(ex.map(work, starts))
    return counts


def weight_enumerator(
    P: ProjectiveSystem,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> dict[int, int]:
    """Exact weight enumerator of any code associated with the system."""
    amb = P.ambient
    Q = amb.tower.order
    counts = hyperplane_point_counts(P, cap=cap, threads=threads)
    N = P.length
    enum: dict[int, int] = {0: 1}
    vals, cnt = np.unique(counts, return_counts=True)
    for on_h, h in zip(vals, cnt):
        w = N - int(on_h)
        enum[w] = enum.get(w, 0) + (Q - 1) * int(h)
    assert sum(enum.values()) == Q**amb.k, "enumerator must count all codewords"
    assert max(enum) <= N
    return enum


def materialized_enumerator(P: ProjectiveSystem, cap: int | None = 10**6) -> dict[int, int]:
    """Oracle: build the generator column-by-column and scan every codeword."""
    amb = P.ambient
    F = amb.tower.fqm
    Q = amb.tower.order
    k = amb.k
    if cap is not None and Q**k > cap:
        raise EnumerationCapExceeded("codeword scan exceeds cap")
    cols = []
    for pt in sorted(P.entries):
        cols.extend([list(pt)] * P.entries[pt])
    G = np.array(cols, dtype=DTYPE).T  # k x N
    enum: dict[int, int] = {}
    for msg in product(range(Q), repeat=k):
        word = linalg.vecmat(F, np.array(msg, dtype=DTYPE), G)
        w = int(np.count_nonzero(word))
        enum[w] = enum.get(w, 0) + 1
    return enum


def srg_from_two_intersection(
    P: ProjectiveSystem,
    verify_graph: bool = False,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    verify_cap: int = 4096,
) -> SrgParams:
    """SRG parameters of the coset graph of a two-intersection set.

    verify_graph additionally builds the graph on Q^k vertices and
    checks regularity, lambda and mu exhaustively (within verify_cap).
    """
    amb = P.ambient
    Q = amb.tower.order
    k = amb.k
    counts = hyperplane_point_counts(P, cap=cap)
    sizes = sorted(set(int(c) for c in counts))
    if len(sizes) != 2:
        raise NotTwoIntersection(f"hyperplane intersection sizes are {sizes}")
    if not P.spans():
        raise NotTwoIntersection("the point set must span the space")
    w0, w1 = sizes
    N = P.length
    v = Q**k
    K = N * (Q - 1)
    common = Q**2 * (N - w0) * (N - w1)
    lam = K * K + 3 * K - Q * (2 * N - w0 - w1) - K * Q * (2 * N - w0 - w1) + common
    assert common % v == 0, "mu must be an integer for a two-intersection set"
    mu = common // v
    params = SrgParams(v=v, K=K, lam=lam, mu=mu)
    if verify_graph:
        verify_srg(P, params, cap=verify_cap)
    return params


def graph_adjacency(P: ProjectiveSystem, cap: int = 4096) -> np.ndarray:
    """Dense adjacency of the difference graph on the Q^k ambient vectors."""
    amb = P.ambient
    F = amb.tower.fqm
    Q = amb.tower.order
    k = amb.k
    v = Q**k
    if v > cap:
        raise EnumerationCapExceeded(f"{v} vertices exceed the graph cap {cap}")
    vec_codes = np.arange(v, dtype=np.int64)
    vecs = np.empty((v, k), dtype=DTYPE)
    tmp = vec_codes.copy()
    for c in range(k):
        vecs[:, c] = tmp % Q
        tmp //= Q
    weights = np.array([Q**c for c in range(k)], dtype=np.int64)
    A = np.zeros((v, v), dtype=np.uint8)
    for pt in P.entries:
        p = np.array(pt, dtype=DTYPE)
        for scal in range(1, Q):
            step = np.asarray(F.mul(scal, p), dtype=DTYPE)
            nbr = np.asarray(F.add(vecs, step[None, :]), dtype=np.int64) @ weights
            A[vec_codes, nbr] = 1
    assert not A.diagonal().any()
    assert np.array_equal(A, A.T)
    return A


def verify_srg(P: ProjectiveSystem, params: SrgParams, cap: int = 4096) -> None:
    """Exhaustive strong-regularity check of the difference graph."""
    A = graph_adjacency(P, cap=cap)
    deg = A.sum(axis=1)
    assert np.all(deg == params.K), "graph is not K-regular"
    common = (A.astype(np.int64) @ A.astype(np.int64))
    adj = A.astype(bool)
    off = ~np.eye(A.shape[0], dtype=bool)
    assert np.all(common[adj] == params.lam), "lambda mismatch on adjacent pairs"
    assert np.all(common[(~adj) & off] == params.mu), "mu mismatch on non-adjacent pairs"


def export_dot(P: ProjectiveSystem, cap: int = 256) -> str:
    """Tiny DOT rendering of the difference graph for eyeballing."""
    A = graph_adjacency(P, cap=cap)
    lines = ["graph srg {"]
    v = A.shape[0]
    for i in range(v):
        for j in range(i + 1, v):
            if A[i, j]:
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines)
