"""Octonions, split octonions and their closed subalgebras, over the rationals.

Basis order is ``1, i, j, k, kl, jl, il, l`` for the octonions and
``1, I, J, K, KL, JL, IL, L`` for the split octonions.  The imaginary-unit
products are stored as literal signed index tables and cross-checked at
import time against Cayley-Dickson doubling of the quaternions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import RatMatrix

OCTONION_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l")
SPLIT_NAMES = ("1", "I", "J", "K", "KL", "JL", "IL", "L")

# Rows/columns run over the seven imaginary units in basis order.
# i*il and j*jl are -l: distinct imaginary units anticommute.
_OCTONION_TABLE = """
 -1   k  -j   jl -kl -l   il
 -k  -1   i  -il -l   kl  jl
  j  -i  -1  -l   il -jl  kl
 -jl  il  l  -1   i  -j  -k
  kl  l  -il -i  -1   k  -j
  l  -kl  jl  j  -k  -1  -i
 -il -jl -kl  k   j   i  -1
"""

_SPLIT_TABLE = """
 -1   K  -J   JL -KL -L   IL
 -K  -1   I  -IL -L   KL  JL
  J  -I  -1  -L   IL -JL  KL
 -JL  IL  L   1  -I   J   K
  KL  L  -IL  I   1  -K   J
  L  -KL  JL -J   K   1   I
 -IL -JL -KL -K  -J  -I   1
"""


class InitializationError(RuntimeError):
    """A stored table disagrees with the independent construction."""


def _parse_table(text: str, names: Sequence[str]) -> tuple[tuple[tuple[int, int], ...], ...]:
    index = {n: a for a, n in enumerate(names)}
    rows = [line.split() for line in text.strip().splitlines()]
    table = [[(0, 0)] * 8 for _ in range(8)]
    for a in range(8):
        table[0][a] = (1, a)
        table[a][0] = (1, a)
    for r, row in enumerate(rows, start=1):
        if len(row) != 7:
            raise InitializationError(f"table row {r} has {len(row)} entries")
        for c, entry in enumerate(row, start=1):
            sign = -1 if entry.startswith("-") else 1
            table[r][c] = (sign, index[entry.lstrip("-")])
    return tuple(tuple(row) for row in table)


_TABLES = {
    False: _parse_table(_OCTONION_TABLE, OCTONION_NAMES),
    True: _parse_table(_SPLIT_TABLE, SPLIT_NAMES),
}


def _quat_mul(x, y):
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _quat_conj(x):
    return (x[0], -x[1], -x[2], -x[3])


def cayley_dickson_product(x: Sequence, y: Sequence, split: bool) -> list:
    """Product of two 8-vectors by doubling the quaternions.

    ``(a + b l)(c + d l) = (ac + eps conj(d) b) + (d a + b conj(c)) l`` with
    ``eps = l^2``; coordinates are mapped to the ``1,i,j,k,kl,jl,il,l`` order.
    """
    eps = 1 if split else -1
    a, b = tuple(x[0:4]), (x[7], x[6], x[5], x[4])
    c, d = tuple(y[0:4]), (y[7], y[6], y[5], y[4])
    first = [p + eps * q for p, q in zip(_quat_mul(a, c), _quat_mul(_quat_conj(d), b))]
    second = [p + q for p, q in zip(_quat_mul(d, a), _quat_mul(b, _quat_conj(c)))]
    return first + [second[3], second[2], second[1], second[0]]


def _cross_check_tables() -> None:
    for split, table in _TABLES.items():
        for r in range(8):
            for c in range(8):
                x = [0] * 8
                y = [0] * 8
                x[r] = 1
                y[c] = 1
                sign, idx = table[r][c]
                expected = [0] * 8
                expected[idx] = sign
                if cayley_dickson_product(x, y, split) != expected:
                    raise InitializationError(
                        f"{'split ' if split else ''}table entry ({r},{c}) "
                        "disagrees with Cayley-Dickson doubling"
                    )


_cross_check_tables()


@dataclass(frozen=True)
class AlgebraSpec:
    """An 8-dimensional composition algebra, or a closed basis subset of one."""

    split: bool
    names: tuple[str, ...]
    support: tuple[int, ...] = tuple(range(8))

    @property
    def dim(self) -> int:
        return len(self.support)

    @property
    def basis_names(self) -> tuple[str, ...]:
        return tuple(self.names[a] for a in self.support)

    @property
    def table(self):
        return _TABLES[self.split]

    @property
    def ambient(self) -> "AlgebraSpec":
        return AlgebraSpec(self.split, self.names)

    @property
    def label(self) -> str:
        return "O'" if self.split else "O"

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown unit {name!r}") from None

    def unit(self, name: str) -> "AlgElem":
        a = self.index(name)
        return self.basis(a)

    def basis(self, a: int) -> "AlgElem":
        coeffs = [Fraction(0)] * 8
        coeffs[a] = Fraction(1)
        return AlgElem(self.ambient, tuple(coeffs))

    def element(self, coeffs: Iterable) -> "AlgElem":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != 8:
            raise ValueError("expected 8 coefficients")
        return AlgElem(self.ambient, coeffs)

    def zero(self) -> "AlgElem":
        return AlgElem(self.ambient, (Fraction(0),) * 8)

    def one(self) -> "AlgElem":
        return self.basis(0)

    def imaginary_units(self) -> list["AlgElem"]:
        return [self.basis(a) for a in self.support if a != 0]

    def subalgebra(self, names: Sequence[str]) -> "AlgebraSpec":
        """Restrict to the span of ``names``; raises if that span is not closed."""
        support = tuple(sorted({self.index(n) for n in names} | {0}))
        for r in support:
            for c in support:
                if self.table[r][c][1] not in support:
                    raise ValueError(f"span of {names} is not closed under multiplication")
        return AlgebraSpec(self.split, self.names, support)

    def contains(self, a: "AlgElem") -> bool:
        return a.spec == self.ambient and all(
            c == 0 for b, c in enumerate(a.coeffs) if b not in self.support
        )


OCTONIONS = AlgebraSpec(False, OCTONION_NAMES)
SPLIT_OCTONIONS = AlgebraSpec(True, SPLIT_NAMES)


def algebra(split: bool, upper: bool) -> AlgebraSpec:
    """Full 8-dimensional algebra with upper- or lower-case unit names."""
    names = SPLIT_NAMES if upper else OCTONION_NAMES
    return AlgebraSpec(split, names)


@dataclass(frozen=True)
class AlgElem:
    spec: AlgebraSpec
    coeffs: tuple[Fraction, ...]

    def _check(self, other: "AlgElem") -> None:
        if not isinstance(other, AlgElem):
            raise TypeError(f"expected AlgElem, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"mismatched algebras: {self.spec.label} vs {other.spec.label}")

    def __add__(self, other):
        self._check(other)
        return AlgElem(self.spec, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return AlgElem(self.spec, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgElem(self.spec, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgElem(self.spec, tuple(a * other for a in self.coeffs))
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgElem(self.spec, tuple(other * a for a in self.coeffs))
        return NotImplemented

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def conj(self) -> "AlgElem":
        return conj(self)

    def real(self) -> Fraction:
        return self.coeffs[0]

    def norm(self) -> Fraction:
        return inner(self, self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [a for a, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        return format_combination(self.coeffs, self.spec.names)


def format_combination(coeffs: Sequence[Fraction], names: Sequence[str]) -> str:
    parts = []
    for c, n in zip(coeffs, names):
        if not c:
            continue
        mag = abs(c)
        body = n if n != "1" else str(mag)
        if n != "1" and mag != 1:
            body = f"{mag}*{n}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def mul(a: AlgElem, b: AlgElem) -> AlgElem:
    a._check(b)
    table = a.spec.table
    out = [Fraction(0)] * 8
    for r, x in enumerate(a.coeffs):
        if not x:
            continue
        row = table[r]
        for c, y in enumerate(b.coeffs):
            if y:
                sign, idx = row[c]
                out[idx] += sign * x * y
    return AlgElem(a.spec, tuple(out))


def conj(a: AlgElem) -> AlgElem:
    return AlgElem(a.spec, (a.coeffs[0],) + tuple(-c for c in a.coeffs[1:]))


def inner(a: AlgElem, b: AlgElem) -> Fraction:
    """Identity component of ``a * conj(b)``."""
    a._check(b)
    return mul(a, conj(b)).coeffs[0]


def left_mult_operator(a: AlgElem) -> RatMatrix:
    """8x8 matrix M with M @ coeffs(x) == coeffs(a * x)."""
    entries = {}
    table = a.spec.table
    for r, x in enumerate(a.coeffs):
        if not x:
            continue
        for c in range(8):
            sign, idx = table[r][c]
            entries[(idx, c)] = entries.get((idx, c), 0) + sign * x
    return RatMatrix.from_entries(8, 8, entries)


def right_mult_operator(a: AlgElem) -> RatMatrix:
    """8x8 matrix M with M @ coeffs(x) == coeffs(x * a)."""
    entries = {}
    table = a.spec.table
    for c, y in enumerate(a.coeffs):
        if not y:
            continue
        for r in range(8):
            sign, idx = table[r][c]
            entries[(idx, r)] = entries.get((idx, r), 0) + sign * y
    return RatMatrix.from_entries(8, 8, entries)


def null_projectors(spec: AlgebraSpec) -> tuple[AlgElem, AlgElem]:
    """``L+ = (1 + L)/2`` and ``L- = (1 - L)/2``; split algebras only."""
    if not spec.split:
        raise ValueError("null projectors exist only in the split octonions")
    one = spec.one()
    ell = spec.basis(7)
    half = Fraction(1, 2)
    return (one + ell) * half, (one - ell) * half


def null_sets(spec: AlgebraSpec = SPLIT_OCTONIONS) -> tuple[dict[str, AlgElem], dict[str, AlgElem]]:
    """``N+ = {I,J,K} L+`` and ``N- = {I,J,K} L-``, keyed by ``I``, ``J``, ``K``."""
    plus, minus = null_projectors(spec)
    keys = spec.names[1:4]
    n_plus = {k.upper(): spec.unit(k) * plus for k in keys}
    n_minus = {k.upper(): spec.unit(k) * minus for k in keys}
    return n_plus, n_minus


def parse_unit_sum(text: str, spec: AlgebraSpec) -> AlgElem:
    """Parse ``K``, ``K+KL`` or ``I-IL`` style sums of unit names."""
    text = text.replace(" ", "")
    out = spec.zero()
    sign = 1
    token = ""
    for ch in text + "+":
        if ch in "+-":
            if token:
                out = out + spec.unit(token) * sign
                token = ""
            elif ch == "-" and not out.is_zero():
                raise ValueError(f"malformed unit sum {text!r}")
            sign = 1 if ch == "+" else -1
        else:
            token += ch
    return out
