"""Dimension expanders built from subspace designs.

With ell = mk, t | ell, t <= m and member dimensions ell/t, the domain
is the tuple space D = U_1 x ... x U_t read as the coefficient list of
f(x) = sum_i f_i x^(q^i); the maps send f to its evaluations f(beta_j)
at an F_q-basis beta of F_{q^m}.  Since beta_j^(q^i) lies in F_{q^m},
each map is realised as an ell x mk matrix over F_q, and expansion
ratios are plain rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from subdesigns import linalg
from subdesigns.config import DEFAULT_ENUMERATION_CAP
from subdesigns.design import SubspaceDesign
from subdesigns.errors import BadDims, EnumerationCapExceeded, NotABasis
from subdesigns.fieldcore import DTYPE
from subdesigns.gf import FFElement
from subdesigns.subspace import enumerate_rref_matrices, gaussian_binomial


@dataclass
class ExpanderFamily:
    """m evaluation maps on the dim-ell coefficient space of a design."""

    design: SubspaceDesign
    beta: tuple[int, ...]
    maps: list[np.ndarray]  # each ell x mk over F_q

    @property
    def ell(self) -> int:
        amb = self.design.ambient
        return amb.tower.m * amb.k

    @property
    def t(self) -> int:
        return self.design.t


def build_expander(D: SubspaceDesign, beta=None) -> ExpanderFamily:
    """Assemble the maps f -> f(beta_j); requires member dims ell/t and t <= m."""
    amb = D.ambient
    tw = amb.tower
    ell = tw.m * amb.k
    t = D.t
    if t > tw.m or ell % t or any(U.dim != ell // t for U in D.members):
        raise BadDims(f"need t <= m and all member dims equal to ell/t = {ell}/{t}")
    if beta is None:
        gen = tw.q if tw.m > 1 else 0
        beta = [int(tw.fqm.pow(gen, j)) if tw.m > 1 else 1 for j in range(tw.m)]
    beta = [b.code if isinstance(b, FFElement) else int(b) for b in beta]
    if len(beta) != tw.m or linalg.rank(tw.fq, tw.fqm.to_digits(np.array(beta, dtype=DTYPE))) != tw.m:
        raise NotABasis("beta must be an F_q-basis of F_{q^m}")

    maps = []
    for b in beta:
        rows = []
        for i, U in enumerate(D.members):
            scal = tw.frobenius_code(b, i)  # beta^(q^i)
            vecs = amb.contract(U.basis)  # (ell/t) x k over F_{q^m}
            img = np.asarray(tw.fqm.mul(scal, vecs), dtype=DTYPE)
            rows.append(amb.expand(img))
        maps.append(np.vstack(rows))
    fam = ExpanderFamily(design=D, beta=tuple(beta), maps=maps)
    assert all(M.shape == (ell, ell) for M in fam.maps)
    return fam


@dataclass
class ExpansionReport:
    per_dim: dict[int, dict] = field(default_factory=dict)
    eta: Fraction | None = None
    zeta: Fraction | None = None
    verdict: bool | None = None


def expansion_check(
    fam: ExpanderFamily,
    max_dim: int,
    mode: str = "exhaustive",
    samples: int = 200,
    seed: int = 0,
    target: tuple | None = None,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> ExpansionReport:
    """Minimum of dim(sum_j Gamma_j(U)) / dim(U) over subspaces of each dimension.

    "exhaustive" enumerates every subspace of the tested dimension (cap
    checked first); "sample" draws uniform subspaces through rank-r
    rejection sampling with the given seed.  A (eta, zeta) target turns
    into a verdict over the dimensions up to eta * ell.
    """
    tw = fam.design.ambient.tower
    q = tw.q
    ell = fam.ell
    report = ExpansionReport()
    if target is not None:
        report.eta, report.zeta = Fraction(target[0]), Fraction(target[1])
    rng = np.random.default_rng(seed)
    for r in range(1, min(max_dim, ell) + 1):
        count = gaussian_binomial(ell, r, q)
        if mode == "exhaustive":
            if cap is not None and count > cap:
                raise EnumerationCapExceeded(f"{count} subspaces of dim {r} exceed cap {cap}")
            bases = (M for M, _ in enumerate_rref_matrices(q, r, ell))
        elif mode == "sample":
            def sampled():
                for _ in range(samples):
                    while True:
                        M = rng.integers(0, q, (r, ell)).astype(DTYPE)
                        R, _ = linalg.rref(tw.fq, M)
                        if R.shape[0] == r:
                            yield R
                            break

            bases = sampled()
        else:
            raise ValueError("mode must be 'exhaustive' or 'sample'")
        best = None
        witness = None
        for X in bases:
            stacked = np.vstack([linalg.matmul(tw.fq, X, M) for M in fam.maps])
            ratio = Fraction(linalg.rank(tw.fq, stacked), r)
            if best is None or ratio < best:
                best, witness = ratio, X.copy()
        report.per_dim[r] = {
            "min_ratio": best,
            "witness": witness,
            "mode": mode,
            "count": count if mode == "exhaustive" else samples,
        }
    if target is not None:
        ok = True
        for r, data in report.per_dim.items():
            if Fraction(r) <= report.eta * ell and data["min_ratio"] < report.zeta:
                ok = False
        report.verdict = ok
    return report
