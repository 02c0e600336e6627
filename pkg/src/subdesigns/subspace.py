"""F_q- and F_{q^m}-subspaces of the ambient V = F_{q^m}^k.

F_q-subspaces are stored as canonical RREF bases of the expanded space
F_q^(mk); the expansion basis of F_{q^m} over F_q is fixed once and for
all as 1, y, ..., y^(m-1) per coordinate block (and recorded as such in
the serialized formats).  F_{q^m}-subspaces are RREF bases over the top
field.  Canonical bases make equality a row-wise comparison.

Enumeration streams are deterministic, restartable and chunkable by
index range: pivot supports run in lexicographic order and the free
entries in row-major code order.  Counts are checked against Gaussian
binomials before any iteration starts.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

import numpy as np

from subdesigns import linalg
from subdesigns.config import DEFAULT_ENUMERATION_CAP
from subdesigns.errors import (
    AmbientMismatch,
    DimensionMismatch,
    EnumerationCapExceeded,
    ZeroSubspace,
)
from subdesigns.fieldcore import DTYPE
from subdesigns.gf import FFElement, FieldTower


def gaussian_binomial(a: int, b: int, Q: int) -> int:
    """Number of b-dimensional subspaces of an a-dimensional space over F_Q."""
    if b < 0 or b > a:
        return 0
    num = den = 1
    for i in range(b):
        num *= Q ** (a - i) - 1
        den *= Q ** (i + 1) - 1
    assert num % den == 0
    return num // den


class AmbientSpace:
    """V = F_{q^m}^k together with its fixed F_q-expansion to F_q^(mk)."""

    def __init__(self, tower: FieldTower, k: int):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.tower = tower
        self.k = k
        self.n_fq = tower.m * k
        self._gram = None

    def __eq__(self, other) -> bool:
        return isinstance(other, AmbientSpace) and other.tower is self.tower and other.k == self.k

    def __hash__(self) -> int:
        return hash((id(self.tower), self.k))

    def __repr__(self) -> str:
        return f"AmbientSpace(F_{self.tower.order}^{self.k})"

    # -- coordinate expansion ---------------------------------------------------

    def expand(self, vecs: np.ndarray) -> np.ndarray:
        """(..., k) F_{q^m} codes -> (..., mk) F_q codes, blockwise little-endian."""
        vecs = np.asarray(vecs, dtype=DTYPE)
        dig = self.tower.fqm.to_digits(vecs)  # (..., k, m)
        return dig.reshape(*vecs.shape[:-1], self.n_fq).astype(DTYPE)

    def contract(self, vecs: np.ndarray) -> np.ndarray:
        """(..., mk) F_q codes -> (..., k) F_{q^m} codes."""
        vecs = np.asarray(vecs, dtype=DTYPE)
        dig = vecs.reshape(*vecs.shape[:-1], self.k, self.tower.m)
        return self.tower.fqm.from_digits(dig).astype(DTYPE)

    @property
    def trace_gram(self) -> np.ndarray:
        """Gram matrix over F_q of (u, v) -> Tr(u . v) in expanded coordinates."""
        if self._gram is None:
            t = self.tower
            m, k = t.m, self.k
            T = np.zeros((m, m), dtype=DTYPE)
            gen = t.q if m > 1 else 0
            for a in range(m):
                for b in range(m):
                    ypow = int(t.fqm.pow(gen, a + b)) if m > 1 else 1
                    T[a, b] = t.fq_code(t.trace_code(ypow))
            G = np.zeros((m * k, m * k), dtype=DTYPE)
            for i in range(k):
                G[i * m : (i + 1) * m, i * m : (i + 1) * m] = T
            self._gram = G
        return self._gram


class FqSubspace:
    """An F_q-subspace of V in canonical RREF form over the expanded coordinates."""

    def __init__(self, ambient: AmbientSpace, basis: np.ndarray, pivots: list[int]):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_expanded_rows(cls, ambient: AmbientSpace, rows) -> "FqSubspace":
        M = np.asarray(rows, dtype=DTYPE).reshape(-1, ambient.n_fq) if len(rows) else np.zeros((0, ambient.n_fq), dtype=DTYPE)
        R, piv = linalg.rref(ambient.tower.fq, M)
        return cls(ambient, R, piv)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqSubspace)
            and other.ambient == self.ambient
            and other.basis.shape == self.basis.shape
            and bool(np.array_equal(other.basis, self.basis))
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"FqSubspace(dim={self.dim} of {self.ambient})"

    def contains_expanded(self, v) -> bool:
        return linalg.in_rowspace(self.ambient.tower.fq, self.basis, self.pivots, v)

    def vectors_expanded(self, cap: int | None = DEFAULT_ENUMERATION_CAP) -> np.ndarray:
        """All q^dim vectors (expanded coordinates), coefficient-lexicographic."""
        q = self.ambient.tower.q
        r = self.dim
        if cap is not None and q**r > cap:
            raise EnumerationCapExceeded(f"{q**r} vectors exceed cap {cap}")
        if r == 0:
            return np.zeros((1, self.ambient.n_fq), dtype=DTYPE)
        combos = np.indices((q,) * r).reshape(r, -1).T.astype(DTYPE)
        return linalg.matmul(self.ambient.tower.fq, combos, self.basis)

    def gen_block(self) -> np.ndarray:
        """k x dim matrix over F_{q^m} whose columns are the basis (contracted)."""
        return self.ambient.contract(self.basis).T.copy()


class FqmSubspace:
    """An F_{q^m}-subspace of V in canonical RREF form."""

    def __init__(self, ambient: AmbientSpace, basis: np.ndarray, pivots: list[int]):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_rows(cls, ambient: AmbientSpace, rows) -> "FqmSubspace":
        M = np.asarray(rows, dtype=DTYPE).reshape(-1, ambient.k) if len(rows) else np.zeros((0, ambient.k), dtype=DTYPE)
        R, piv = linalg.rref(ambient.tower.fqm, M)
        return cls(ambient, R, piv)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqmSubspace)
            and other.ambient == self.ambient
            and other.basis.shape == self.basis.shape
            and bool(np.array_equal(other.basis, self.basis))
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"FqmSubspace(dim={self.dim} of {self.ambient})"

    def expand_fq(self) -> FqSubspace:
        """The same point set as an F_q-subspace (dimension m * dim)."""
        t = self.ambient.tower
        rows = []
        gen = t.q if t.m > 1 else 0
        for w in self.basis:
            for j in range(t.m):
                yj = int(t.fqm.pow(gen, j)) if t.m > 1 else 1
                rows.append(np.asarray(t.fqm.mul(w, yj), dtype=DTYPE))
        if not rows:
            return FqSubspace.from_expanded_rows(self.ambient, [])
        U = FqSubspace.from_expanded_rows(self.ambient, self.ambient.expand(np.array(rows, dtype=DTYPE)))
        assert U.dim == t.m * self.dim
        return U

    def contains(self, vec) -> bool:
        return linalg.in_rowspace(self.ambient.tower.fqm, self.basis, self.pivots, vec)


class WeightedPointSet:
    """Projective points with positive weights; keys are canonical representatives."""

    def __init__(self, ambient: AmbientSpace, entries: dict[tuple, int]):
        self.ambient = ambient
        self.entries = entries

    def __len__(self) -> int:
        return len(self.entries)

    def weight(self, point: tuple) -> int:
        return self.entries.get(point, 0)

    def __repr__(self) -> str:
        return f"WeightedPointSet({len(self.entries)} points of {self.ambient})"


# --- constructors and lattice operations --------------------------------------


def _coerce_vectors(ambient: AmbientSpace, vectors: Iterable) -> np.ndarray:
    rows = []
    for vec in vectors:
        row = []
        for entry in vec:
            if isinstance(entry, FFElement):
                if entry.tower is not ambient.tower:
                    raise AmbientMismatch("vector entry from another tower")
                row.append(entry.code)
            else:
                row.append(int(entry))
        if len(row) != ambient.k:
            raise DimensionMismatch(f"expected vectors of length {ambient.k}")
        rows.append(row)
    return np.asarray(rows, dtype=DTYPE) if rows else np.zeros((0, ambient.k), dtype=DTYPE)


def span_fq(ambient: AmbientSpace, vectors: Iterable) -> FqSubspace:
    """Canonical F_q-span of vectors of F_{q^m}^k (given as FFElement tuples or codes)."""
    V = _coerce_vectors(ambient, vectors)
    if V.shape[0] == 0:
        return FqSubspace.from_expanded_rows(ambient, [])
    return FqSubspace.from_expanded_rows(ambient, ambient.expand(V))


def _as_fq(X) -> FqSubspace:
    return X.expand_fq() if isinstance(X, FqmSubspace) else X


def meet_join(U, W) -> tuple[FqSubspace, FqSubspace]:
    """(U & W, U + W) as F_q-subspaces; FqmSubspace arguments are expanded."""
    U = _as_fq(U)
    W = _as_fq(W)
    if U.ambient != W.ambient:
        raise AmbientMismatch("subspaces of different ambients")
    F = U.ambient.tower.fq
    meet_b = linalg.intersect_rowspaces(F, U.basis, W.basis)
    join_b = linalg.sum_rowspaces(F, U.basis, W.basis)
    meet = FqSubspace(U.ambient, meet_b, linalg.rref(F, meet_b)[1] if meet_b.shape[0] else [])
    join = FqSubspace(U.ambient, join_b, linalg.rref(F, join_b)[1] if join_b.shape[0] else [])
    assert meet.dim + join.dim == U.dim + W.dim, "Grassmann identity violated"
    return meet, join


def fqm_span(U: FqSubspace) -> FqmSubspace:
    """Smallest F_{q^m}-subspace containing U."""
    if U.dim == 0:
        return FqmSubspace.from_rows(U.ambient, [])
    return FqmSubspace.from_rows(U.ambient, U.ambient.contract(U.basis))


def canonical_point(ambient: AmbientSpace, vec) -> tuple:
    """Projective representative with first nonzero coordinate 1."""
    F = ambient.tower.fqm
    v = np.asarray(vec, dtype=DTYPE)
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        raise ZeroSubspace("zero vector has no projective point")
    lead = int(v[nz[0]])
    if lead != 1:
        v = np.asarray(F.mul(v, int(F.inv(lead))), dtype=DTYPE)
    return tuple(int(c) for c in v)


def canonical_projective_reps(Q: int, k: int) -> np.ndarray:
    """All (Q^k-1)/(Q-1) canonical point representatives; deterministic order."""
    if k == 0:
        return np.zeros((0, 0), dtype=DTYPE)
    blocks = []
    for j in range(k):
        tail = k - 1 - j
        if tail:
            free = np.indices((Q,) * tail).reshape(tail, -1).T.astype(DTYPE)
        else:
            free = np.zeros((1, 0), dtype=DTYPE)
        block = np.zeros((free.shape[0], k), dtype=DTYPE)
        block[:, j] = 1
        if tail:
            block[:, j + 1 :] = free
        blocks.append(block)
    return np.vstack(blocks)


def hyperplane_normals(ambient: AmbientSpace) -> np.ndarray:
    """Canonical normal vectors of all hyperplanes of V(k, q^m)."""
    return canonical_projective_reps(ambient.tower.order, ambient.k)


def hyperplane_subspace(ambient: AmbientSpace, normal) -> FqmSubspace:
    ker = linalg.right_kernel(ambient.tower.fqm, np.asarray(normal, dtype=DTYPE).reshape(1, -1))
    return FqmSubspace.from_rows(ambient, ker)


def enumerate_rref_matrices(
    Q: int,
    s: int,
    k: int,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[tuple[np.ndarray, list[int]]]:
    """All s x k RREF matrices over a Q-element field, exactly once each.

    Pivot supports run in lexicographic order, free entries in row-major
    code order; restartable and chunkable through [start, stop).
    """
    total = gaussian_binomial(k, s, Q)
    if stop is None:
        stop = total
    if s == 0:
        if start <= 0 < stop:
            yield np.zeros((0, k), dtype=DTYPE), []
        return
    idx = 0
    for pivots in itertools.combinations(range(k), s):
        free_pos = [
            (i, c)
            for i in range(s)
            for c in range(pivots[i] + 1, k)
            if c not in pivots
        ]
        block = Q ** len(free_pos)
        if idx + block <= start:
            idx += block
            continue
        if idx >= stop:
            return
        for vals in itertools.product(range(Q), repeat=len(free_pos)):
            if idx >= stop:
                return
            if idx >= start:
                M = np.zeros((s, k), dtype=DTYPE)
                for i, p in enumerate(pivots):
                    M[i, p] = 1
                for (i, c), v in zip(free_pos, vals):
                    M[i, c] = v
                yield M, list(pivots)
            idx += 1


def enumerate_fqm_subspaces(
    ambient: AmbientSpace,
    s: int,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[FqmSubspace]:
    """All s-dimensional F_{q^m}-subspaces, each exactly once, deterministic order."""
    k = ambient.k
    if not 0 <= s <= k:
        raise DimensionMismatch(f"s must lie in [0, {k}]")
    Q = ambient.tower.order
    total = gaussian_binomial(k, s, Q)
    if cap is not None and total > cap:
        raise EnumerationCapExceeded(f"{total} subspaces of dim {s} exceed cap {cap}")
    for M, piv in enumerate_rref_matrices(Q, s, k, start=start, stop=stop):
        yield FqmSubspace(ambient, M, piv)


def subspace_count(ambient: AmbientSpace, s: int) -> int:
    return gaussian_binomial(ambient.k, s, ambient.tower.order)


def linear_set(U: FqSubspace, cap: int | None = DEFAULT_ENUMERATION_CAP) -> WeightedPointSet:
    """The linear set L_U with point weights w(P) = dim_q(U meet P).

    Also checks the rank identity: summing (q^w - 1)/(q - 1) over the
    points recovers (q^n - 1)/(q - 1) for n = dim U.
    """
    if U.dim == 0:
        raise ZeroSubspace("the zero subspace has no linear set")
    amb = U.ambient
    q = amb.tower.q
    vecs = U.vectors_expanded(cap=cap)
    pts = amb.contract(vecs)
    counts: dict[tuple, int] = {}
    for row in pts:
        if not np.any(row):
            continue
        key = canonical_point(amb, row)
        counts[key] = counts.get(key, 0) + 1
    entries: dict[tuple, int] = {}
    for key, cnt in counts.items():
        w = 0
        acc = 1
        while acc - 1 < cnt:
            acc *= q
            w += 1
        assert acc - 1 == cnt, "point multiplicity is not of the form q^w - 1"
        entries[key] = w
    n = U.dim
    assert sum((q**w - 1) // (q - 1) for w in entries.values()) == (q**n - 1) // (q - 1), (
        "linear-set rank identity violated"
    )
    return WeightedPointSet(amb, entries)


def ordinary_dual(U: FqSubspace) -> FqSubspace:
    """Orthogonal complement under (u, v) -> Tr(u . v); dim U + dim U' = mk."""
    amb = U.ambient
    F = amb.tower.fq
    if U.dim == 0:
        full = np.eye(amb.n_fq, dtype=DTYPE)
        return FqSubspace(amb, full, list(range(amb.n_fq)))
    cond = linalg.matmul(F, U.basis, amb.trace_gram)
    ker = linalg.right_kernel(F, cond)
    dual = FqSubspace(amb, ker, linalg.rref(F, ker)[1] if ker.shape[0] else [])
    assert dual.dim + U.dim == amb.n_fq
    return dual


def fqm_dual(W: FqmSubspace) -> FqmSubspace:
    """Orthogonal complement over F_{q^m} under the standard dot form."""
    amb = W.ambient
    if W.dim == 0:
        return FqmSubspace(amb, np.eye(amb.k, dtype=DTYPE), list(range(amb.k)))
    ker = linalg.right_kernel(amb.tower.fqm, W.basis)
    return FqmSubspace.from_rows(amb, ker)


def hyperplane_meet_dim(U: FqSubspace, normal: np.ndarray, gen_block: np.ndarray | None = None) -> int:
    """dim_q(U meet normal^perp) = dim U - rk_q(normal . G) for G the basis block."""
    t = U.ambient.tower
    if gen_block is None:
        gen_block = U.gen_block()
    xg = linalg.vecmat(t.fqm, np.asarray(normal, dtype=DTYPE), gen_block)
    dig = t.fqm.to_digits(xg)
    return U.dim - linalg.rank(t.fq, dig)
