"""JSON / CSV / DOT serialization for towers, subspaces, designs and codes.

Field elements travel as nested little-endian digit arrays: an element
of F_{q^m} is m lists of h base-p digits (one list per coefficient in
the expansion basis 1, y, ..., y^(m-1)); an F_q scalar is one such
list.  Aliases like "i" or "w" are accepted on input paths only, never
emitted.  Dumps are canonical (sorted keys, fixed separators) so a
round trip is byte-stable, and subspace rows are re-canonicalized on
load and compared against the file.
"""

from __future__ import annotations

import json

import numpy as np

from subdesigns.errors import FormatError
from subdesigns.fieldcore import DTYPE
from subdesigns.gf import FieldTower, make_tower
from subdesigns.design import SubspaceDesign
from subdesigns.strongbridge import StrongSubspaceDesign
from subdesigns.subspace import AmbientSpace, FqmSubspace, FqSubspace
from subdesigns.sumrank import SumRankCode


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# --- scalars -------------------------------------------------------------------


def _fq_digits(tower: FieldTower, code: int) -> list[int]:
    digs = []
    c = int(code)
    for _ in range(tower.h):
        digs.append(c % tower.p)
        c //= tower.p
    return digs


def _fq_from_digits(tower: FieldTower, digs) -> int:
    if len(digs) != tower.h:
        raise FormatError(f"expected {tower.h} base-p digits")
    c = 0
    for d in reversed(list(digs)):
        d = int(d)
        if not 0 <= d < tower.p:
            raise FormatError("digit out of range")
        c = c * tower.p + d
    return c


def element_to_json(tower: FieldTower, code: int) -> list[list[int]]:
    return [list(digs) for digs in tower.coeffs_from_code(int(code))]


def element_from_json(tower: FieldTower, obj) -> int:
    return tower.code_from_coeffs(obj)


# --- tower ----------------------------------------------------------------------


def tower_to_json(tower: FieldTower) -> dict:
    return {
        "p": tower.p,
        "h": tower.h,
        "m": tower.m,
        "fq_modulus": list(tower.fq_modulus),
        "fqm_modulus": [_fq_digits(tower, c) for c in tower.fqm_modulus],
        "expansion_basis": "powers-of-y",
    }


def tower_from_json(obj) -> FieldTower:
    try:
        p, h, m = int(obj["p"]), int(obj["h"]), int(obj["m"])
        fq_mod = tuple(int(c) for c in obj["fq_modulus"])
        tmp = make_tower(p, h, m, fq_modulus=fq_mod)
        fqm_mod = tuple(_fq_from_digits(tmp, digs) for digs in obj["fqm_modulus"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad tower record: {exc}") from exc
    return make_tower(p, h, m, fq_modulus=fq_mod, fqm_modulus=fqm_mod)


# --- subspaces --------------------------------------------------------------------


def ambient_to_json(amb: AmbientSpace) -> dict:
    return {"tower": tower_to_json(amb.tower), "k": amb.k}


def ambient_from_json(obj) -> AmbientSpace:
    try:
        return AmbientSpace(tower_from_json(obj["tower"]), int(obj["k"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad ambient record: {exc}") from exc


def fq_subspace_rows(U: FqSubspace) -> list:
    t = U.ambient.tower
    return [[_fq_digits(t, int(c)) for c in row] for row in U.basis]


def subspace_to_json(U: FqSubspace) -> dict:
    return {"ambient": ambient_to_json(U.ambient), "rows": fq_subspace_rows(U)}


def _rows_to_fq_subspace(amb: AmbientSpace, rows) -> FqSubspace:
    t = amb.tower
    mat = []
    for row in rows:
        if len(row) != amb.n_fq:
            raise FormatError(f"rows must have {amb.n_fq} F_q coordinates")
        mat.append([_fq_from_digits(t, digs) for digs in row])
    arr = np.asarray(mat, dtype=DTYPE) if mat else np.zeros((0, amb.n_fq), dtype=DTYPE)
    U = FqSubspace.from_expanded_rows(amb, arr)
    if U.basis.shape != arr.shape or not np.array_equal(U.basis, arr):
        raise FormatError("subspace rows are not in canonical reduced echelon form")
    return U


def subspace_from_json(obj) -> FqSubspace:
    amb = ambient_from_json(obj["ambient"])
    return _rows_to_fq_subspace(amb, obj["rows"])


# --- designs ----------------------------------------------------------------------


def design_to_json(D: SubspaceDesign) -> dict:
    return {
        "ambient": ambient_to_json(D.ambient),
        "members": [fq_subspace_rows(U) for U in D.members],
    }


def design_from_json(obj) -> SubspaceDesign:
    try:
        amb = ambient_from_json(obj["ambient"])
        members = [_rows_to_fq_subspace(amb, rows) for rows in obj["members"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad design record: {exc}") from exc
    return SubspaceDesign(amb, members)


def strong_design_to_json(S: StrongSubspaceDesign) -> dict:
    t = S.ambient.tower
    return {
        "ambient": ambient_to_json(S.ambient),
        "members": [
            [[element_to_json(t, int(c)) for c in row] for row in V.basis] for V in S.members
        ],
    }


def strong_design_from_json(obj) -> StrongSubspaceDesign:
    amb = ambient_from_json(obj["ambient"])
    t = amb.tower
    members = []
    for rows in obj["members"]:
        mat = [[element_from_json(t, e) for e in row] for row in rows]
        V = FqmSubspace.from_rows(amb, np.asarray(mat, dtype=DTYPE) if mat else [])
        if mat and not np.array_equal(V.basis, np.asarray(mat, dtype=DTYPE)):
            raise FormatError("strong-design rows are not canonical RREF")
        members.append(V)
    return StrongSubspaceDesign(amb, members)


# --- codes -----------------------------------------------------------------------


def code_to_json(C: SumRankCode) -> dict:
    t = C.tower
    return {
        "tower": tower_to_json(t),
        "lengths": list(C.lengths),
        "generator": [[element_to_json(t, int(c)) for c in row] for row in C.generator],
    }


def code_from_json(obj) -> SumRankCode:
    try:
        tower = tower_from_json(obj["tower"])
        lengths = [int(n) for n in obj["lengths"]]
        rows = [[element_from_json(tower, e) for e in row] for row in obj["generator"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad code record: {exc}") from exc
    G = np.asarray(rows, dtype=DTYPE)
    if G.ndim != 2 or G.shape[1] != sum(lengths):
        raise FormatError("generator shape does not match the length profile")
    blocks = []
    at = 0
    for n in lengths:
        blocks.append(G[:, at : at + n])
        at += n
    return SumRankCode(tower, lengths, blocks)


# --- CSV / DOT ---------------------------------------------------------------------


def histogram_csv(hist: dict[int, int], header: tuple[str, str] = ("weight", "count")) -> str:
    lines = [",".join(header)]
    for key in sorted(hist):
        lines.append(f"{key},{hist[key]}")
    return "\n".join(lines) + "\n"
