"""The two-level field tower F_p < F_q = F_p[x]/(f) < F_{q^m} = F_q[y]/(g).

Elements live in F_{q^m} and are encoded as integer codes (little-endian
base-q digit strings of the coordinates in the basis 1, y, ..., y^(m-1);
each F_q digit is itself a base-p digit string over the basis 1, x, ...,
x^(h-1)).  F_q sits inside F_{q^m} as the codes below q.

Built-in default moduli (lexicographically smallest monic irreducibles,
little-endian coefficient lists) cover p in {2,3,5}, h in {1,2}, m <= 6;
anything else is found by the same deterministic search.  The pinned
small fields are the usual ones:

    F_4  = F_2[y]/(y^2+y+1)      w := y,  w^2 = w+1
    F_9  = F_3[y]/(y^2+1)        i := y,  i^2 = -1

Towers are cached by their defining data, so equal parameters give the
*same* object and element equality can require tower identity.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from subdesigns.errors import (
    DivisionByZero,
    NotInBaseField,
    NotIrreducible,
    NotPrime,
    TowerMismatch,
)
from subdesigns.fieldcore import SmallField, find_irreducible, poly_is_irreducible

# (p, h): little-endian modulus of F_q over F_p; h = 1 uses the formal x.
_FQ_MODULI = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (5, 1): (0, 1),
    (5, 2): (2, 0, 1),
}

# (p, h, m): little-endian modulus of F_{q^m} over F_q (entries are F_q codes).
_FQM_MODULI = {
    (2, 1, 1): (0, 1),
    (2, 1, 2): (1, 1, 1),
    (2, 1, 3): (1, 1, 0, 1),
    (2, 1, 4): (1, 1, 0, 0, 1),
    (2, 1, 5): (1, 0, 1, 0, 0, 1),
    (2, 1, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 2, 1): (0, 1),
    (2, 2, 2): (2, 1, 1),
    (2, 2, 3): (2, 0, 0, 1),
    (2, 2, 4): (1, 2, 1, 0, 1),
    (2, 2, 5): (2, 1, 0, 0, 0, 1),
    (2, 2, 6): (2, 1, 1, 0, 0, 0, 1),
    (3, 1, 1): (0, 1),
    (3, 1, 2): (1, 0, 1),
    (3, 1, 3): (1, 2, 0, 1),
    (3, 1, 4): (2, 1, 0, 0, 1),
    (3, 1, 5): (1, 2, 0, 0, 0, 1),
    (3, 1, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 2, 1): (0, 1),
    (3, 2, 2): (4, 0, 1),
    (3, 2, 3): (3, 1, 0, 1),
    (3, 2, 4): (4, 0, 0, 0, 1),
    (3, 2, 5): (4, 1, 0, 0, 0, 1),
    (3, 2, 6): (4, 0, 1, 0, 0, 0, 1),
    (5, 1, 1): (0, 1),
    (5, 1, 2): (2, 0, 1),
    (5, 1, 3): (1, 1, 0, 1),
    (5, 1, 4): (2, 0, 0, 0, 1),
    (5, 1, 5): (1, 4, 0, 0, 0, 1),
    (5, 1, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 2, 1): (0, 1),
    (5, 2, 2): (5, 0, 1),
    (5, 2, 3): (6, 0, 0, 1),
    (5, 2, 4): (5, 0, 0, 0, 1),
    (5, 2, 5): (5, 1, 0, 0, 0, 1),
    (5, 2, 6): (6, 0, 0, 0, 0, 0, 1),
}

_TOWER_CACHE: dict[tuple, "FieldTower"] = {}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldTower:
    """Immutable tower F_p < F_q < F_{q^m}; construct via :func:`make_tower`."""

    def __init__(self, p: int, h: int, m: int, fq_modulus: tuple, fqm_modulus: tuple):
        self.p = p
        self.h = h
        self.m = m
        self.fq_modulus = fq_modulus
        self.fqm_modulus = fqm_modulus
        self.q = p**h
        self.order = self.q**m

        self.fp = SmallField(p, None, None)
        self.fq = self.fp if h == 1 else SmallField(p, self.fp, list(fq_modulus))
        self.fqm = SmallField(p, self.fq, list(fqm_modulus)) if m >= 1 else self.fq

        # a -> a^q on F_{q^m}, the Galois generator sigma with s = 1
        codes = np.arange(self.order)
        self.frob = np.asarray(self.fqm.pow(codes, self.q))
        self._norm_arr = None
        self._trace_arr = None

    # -- representation -------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, h={self.h}, m={self.m})"

    @property
    def key(self) -> tuple:
        return (self.p, self.h, self.m, self.fq_modulus, self.fqm_modulus)

    # -- element constructors --------------------------------------------------

    def element(self, spec) -> "FFElement":
        """Build an element from a code, nested coefficient lists, or a string."""
        if isinstance(spec, FFElement):
            if spec.tower is not self:
                raise TowerMismatch("element from another tower")
            return spec
        if isinstance(spec, (int, np.integer)):
            code = int(spec)
            if not 0 <= code < self.order:
                raise ValueError(f"element code {code} out of range")
            return FFElement(self, code)
        if isinstance(spec, str):
            return FFElement(self, self._parse(spec))
        # nested coefficients: m lists of h residues mod p
        return FFElement(self, self.code_from_coeffs(spec))

    def zero(self) -> "FFElement":
        return FFElement(self, 0)

    def one(self) -> "FFElement":
        return FFElement(self, 1)

    def gen(self) -> "FFElement":
        """The residue of y, generating F_{q^m} over F_q (only useful if m > 1)."""
        return FFElement(self, self.q if self.m > 1 else 0)

    def elements(self):
        return (FFElement(self, c) for c in range(self.order))

    def code_from_coeffs(self, coeffs: Sequence[Sequence[int]]) -> int:
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} F_q coefficients")
        code = 0
        for j, fq_digits in enumerate(reversed(coeffs)):
            if len(fq_digits) != self.h:
                raise ValueError(f"expected {self.h} base-p digits per coefficient")
            c = 0
            for d in reversed(fq_digits):
                d = int(d)
                if not 0 <= d < self.p:
                    raise ValueError("digit out of range")
                c = c * self.p + d
            code = code * self.q + c
        return code

    def coeffs_from_code(self, code: int) -> tuple:
        out = []
        for _ in range(self.m):
            c = code % self.q
            code //= self.q
            digs = []
            for _ in range(self.h):
                digs.append(c % self.p)
                c //= self.p
            out.append(tuple(digs))
        return tuple(out)

    # -- string parsing: sums of terms over the generators y (and x) ----------

    def _parse(self, text: str) -> int:
        s = text.replace(" ", "").replace("i", "y").replace("w", "y")
        s = s.replace("-", "+-")
        if s.startswith("+"):
            s = s[1:]
        if not s:
            raise ValueError(f"cannot parse element {text!r}")
        total = 0
        for term in s.split("+"):
            if not term:
                raise ValueError(f"cannot parse element {text!r}")
            total = int(self.fqm.add(total, self._parse_term(term)))
        return total

    def _parse_term(self, term: str) -> int:
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        acc = 1
        for factor in term.split("*"):
            if not factor:
                raise ValueError("empty factor")
            if factor[0] in "xy":
                e = 1
                if len(factor) > 1:
                    if factor[1] != "^":
                        raise ValueError(f"cannot parse factor {factor!r}")
                    e = int(factor[2:])
                base = self.q if factor[0] == "y" else (self.p if self.h > 1 else 0)
                val = int(self.fqm.pow(base, e))
            else:
                n = int(factor) % self.p
                val = n  # prime-subfield integer
            acc = int(self.fqm.mul(acc, val))
        return int(self.fqm.mul(acc, self.p - 1)) if neg else acc

    # -- Galois structure -------------------------------------------------------

    def frobenius_code(self, code: int, j: int = 1) -> int:
        j %= self.m
        for _ in range(j):
            code = int(self.frob[code])
        return code

    def _build_norm_trace(self) -> None:
        codes = np.arange(self.order)
        x = codes.copy()
        nrm = codes.copy()
        tr = codes.copy()
        for _ in range(self.m - 1):
            x = self.frob[x]
            nrm = np.asarray(self.fqm.mul(nrm, x))
            tr = np.asarray(self.fqm.add(tr, x))
        self._norm_arr = nrm
        self._trace_arr = tr

    @property
    def norm_table(self) -> np.ndarray:
        if self._norm_arr is None:
            self._build_norm_trace()
        return self._norm_arr

    @property
    def trace_table(self) -> np.ndarray:
        if self._trace_arr is None:
            self._build_norm_trace()
        return self._trace_arr

    def norm_code(self, code: int) -> int:
        return int(self.norm_table[code])

    def trace_code(self, code: int) -> int:
        return int(self.trace_table[code])

    def in_fq_code(self, code: int) -> bool:
        # a in F_q iff sigma(a) = a
        return int(self.frob[code]) == code

    def fq_code(self, code: int) -> int:
        if not self.in_fq_code(code):
            raise NotInBaseField(f"code {code} is not in F_q")
        return code % self.q

    def nsigma_code(self, alpha: int, i: int, s_exp: int = 1) -> int:
        """N_sigma^i(alpha) = prod_{j<i} sigma^j(alpha), sigma = x -> x^(q^s)."""
        acc = 1
        a = alpha
        for _ in range(i):
            acc = int(self.fqm.mul(acc, a))
            a = self.frobenius_code(a, s_exp)
        return acc


class FFElement:
    """An element of F_{q^m}; immutable, arithmetic via operators."""

    __slots__ = ("tower", "code")

    def __init__(self, tower: FieldTower, code: int):
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "code", int(code))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("FFElement is immutable")

    @property
    def coeffs(self) -> tuple:
        """Nested polynomial-basis coordinates: m tuples of h residues mod p."""
        return self.tower.coeffs_from_code(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def in_fq(self) -> bool:
        return self.tower.in_fq_code(self.code)

    def _check(self, other: "FFElement") -> "FFElement":
        if not isinstance(other, FFElement):
            other = self.tower.element(other)
        if other.tower is not self.tower:
            raise TowerMismatch("elements from different towers")
        return other

    def __eq__(self, other) -> bool:
        return isinstance(other, FFElement) and other.tower is self.tower and other.code == self.code

    def __hash__(self) -> int:
        return hash((id(self.tower), self.code))

    def __add__(self, other):
        other = self._check(other)
        return FFElement(self.tower, int(self.tower.fqm.add(self.code, other.code)))

    def __sub__(self, other):
        other = self._check(other)
        return FFElement(self.tower, int(self.tower.fqm.sub(self.code, other.code)))

    def __neg__(self):
        return FFElement(self.tower, int(self.tower.fqm.neg(self.code)))

    def __mul__(self, other):
        other = self._check(other)
        return FFElement(self.tower, int(self.tower.fqm.mul(self.code, other.code)))

    def __truediv__(self, other):
        other = self._check(other)
        if other.code == 0:
            raise DivisionByZero("division by zero")
        return FFElement(self.tower, int(self.tower.fqm.div(self.code, other.code)))

    def __pow__(self, e: int):
        if e < 0 and self.code == 0:
            raise DivisionByZero("inverse of zero")
        return FFElement(self.tower, int(self.tower.fqm.pow(self.code, e)))

    def inverse(self) -> "FFElement":
        if self.code == 0:
            raise DivisionByZero("inverse of zero")
        return FFElement(self.tower, int(self.tower.fqm.inv(self.code)))

    def __repr__(self) -> str:
        t = self.tower
        if self.code == 0:
            return "0"
        parts = []
        for j, fq_digits in enumerate(self.coeffs):
            c = 0
            for d in reversed(fq_digits):
                c = c * t.p + d
            if c == 0:
                continue
            if t.h == 1:
                coeff = str(c)
            else:
                inner = [f"{d}" if i == 0 else (f"x^{i}" if d == 1 else f"{d}*x^{i}") for i, d in enumerate(fq_digits) if d]
                inner = [s.replace("x^1", "x") for s in inner]
                coeff = inner[0] if len(inner) == 1 else "(" + "+".join(inner) + ")"
            if j == 0:
                parts.append(coeff)
            else:
                ypow = "y" if j == 1 else f"y^{j}"
                parts.append(ypow if coeff == "1" else f"{coeff}*{ypow}")
        return "+".join(parts)


# --- public module operations ------------------------------------------------


def make_tower(p: int, h: int, m: int, fq_modulus=None, fqm_modulus=None) -> FieldTower:
    """Build (or fetch from cache) the tower F_p < F_(p^h) < F_(p^(h*m)).

    Moduli are little-endian monic coefficient lists; omitted ones come
    from the built-in table (or the deterministic lexicographic search).
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if h < 1 or m < 1:
        raise ValueError("h and m must be positive")

    fp = SmallField(p, None, None)
    if fq_modulus is None:
        fq_modulus = _FQ_MODULI.get((p, h)) or tuple(find_irreducible(fp, h))
    fq_modulus = tuple(int(c) for c in fq_modulus)
    if len(fq_modulus) != h + 1 or fq_modulus[-1] != 1:
        raise ValueError(f"fq_modulus must be monic of degree {h}")
    if any(not 0 <= c < p for c in fq_modulus):
        raise ValueError("fq_modulus coefficients must be residues mod p")
    if h > 1 and not poly_is_irreducible(fp, list(fq_modulus)):
        raise NotIrreducible(f"fq_modulus {list(fq_modulus)} is reducible over F_{p}")

    fq = fp if h == 1 else SmallField(p, fp, list(fq_modulus))
    if fqm_modulus is None:
        fqm_modulus = _FQM_MODULI.get((p, h, m)) or tuple(find_irreducible(fq, m))
    fqm_modulus = tuple(int(c) for c in fqm_modulus)
    if len(fqm_modulus) != m + 1 or fqm_modulus[-1] != 1:
        raise ValueError(f"fqm_modulus must be monic of degree {m}")
    if any(not 0 <= c < fq.size for c in fqm_modulus):
        raise ValueError("fqm_modulus coefficients must be F_q codes")
    if m > 1 and not poly_is_irreducible(fq, list(fqm_modulus)):
        raise NotIrreducible(f"fqm_modulus {list(fqm_modulus)} is reducible over F_{fq.size}")

    key = (p, h, m, fq_modulus, fqm_modulus)
    tower = _TOWER_CACHE.get(key)
    if tower is None:
        tower = FieldTower(p, h, m, fq_modulus, fqm_modulus)
        _TOWER_CACHE[key] = tower
    return tower


def field_arith(a: FFElement, b: FFElement | None, kind: str, e: int | None = None) -> FFElement:
    """Exact tower arithmetic: kind in {add, sub, mul, div, inv, pow}."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        if e is None:
            raise ValueError("pow requires the exponent e")
        return a**e
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def frobenius(a: FFElement, j: int) -> FFElement:
    """a^(q^j); j is reduced mod m."""
    return FFElement(a.tower, a.tower.frobenius_code(a.code, j))


def norm_trace(a: FFElement) -> tuple[FFElement, FFElement]:
    """(N_{q^m/q}(a), Tr_{q^m/q}(a)); both provably land in F_q."""
    t = a.tower
    n = t.norm_code(a.code)
    tr = t.trace_code(a.code)
    if not (t.in_fq_code(n) and t.in_fq_code(tr)):
        raise AssertionError("norm/trace left the base field; modulus data corrupt")
    return FFElement(t, n), FFElement(t, tr)
