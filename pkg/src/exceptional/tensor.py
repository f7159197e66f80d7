"""The 64-dimensional algebra A1 (x) A2 and its left-multiplication operators.

Coordinates use the frozen layout ``idx = 8 * first + second``: the first
factor is the one written with upper-case units (``O'`` in ``O' (x) O``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .composition import AlgebraSpec, AlgElem, left_mult_operator, right_mult_operator
from .linalg import RatMatrix


@dataclass(frozen=True)
class TensorPair:
    first: AlgebraSpec
    second: AlgebraSpec

    @property
    def label(self) -> str:
        return f"{self.first.label}:{self.second.label}"

    def elem(self, coeffs: Sequence) -> "TensorElem":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != 64:
            raise ValueError("expected 64 coefficients")
        return TensorElem(self, coeffs)

    def zero(self) -> "TensorElem":
        return TensorElem(self, (Fraction(0),) * 64)

    def basis(self, idx: int) -> "TensorElem":
        c = [Fraction(0)] * 64
        c[idx] = Fraction(1)
        return TensorElem(self, tuple(c))

    def unit_name(self, idx: int) -> str:
        return f"{self.first.names[idx // 8]}*{self.second.names[idx % 8]}"

    def inner_signature_diagonal(self) -> list[Fraction]:
        """Norms of the 64 basis elements (the basis is orthogonal)."""
        n1 = [self.first.basis(a).norm() for a in range(8)]
        n2 = [self.second.basis(b).norm() for b in range(8)]
        return [n1[a] * n2[b] for a in range(8) for b in range(8)]


def tensor(a: AlgElem, b: AlgElem, pair: TensorPair) -> "TensorElem":
    """``a (x) b`` with ``a`` in the first factor and ``b`` in the second."""
    if a.spec != pair.first.ambient or b.spec != pair.second.ambient:
        raise ValueError("factors do not match the tensor pair")
    return TensorElem(pair, tuple(x * y for x in a.coeffs for y in b.coeffs))


labeled = tensor


@dataclass(frozen=True)
class TensorElem:
    pair: TensorPair
    coeffs: tuple[Fraction, ...]

    def _check(self, other):
        if not isinstance(other, TensorElem) or other.pair != self.pair:
            raise ValueError("mismatched tensor pairs")

    def __add__(self, other):
        self._check(other)
        return TensorElem(self.pair, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return TensorElem(self.pair, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TensorElem(self.pair, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorElem(self.pair, tuple(a * other for a in self.coeffs))
        return tmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorElem(self.pair, tuple(other * a for a in self.coeffs))
        return NotImplemented

    def conj(self) -> "TensorElem":
        return tconj(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self):
        for idx, c in enumerate(self.coeffs):
            if c:
                yield idx, c

    def __str__(self) -> str:
        parts = []
        for idx, c in self.terms():
            name = self.pair.unit_name(idx)
            parts.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(parts) if parts else "0"


def tmul(x: TensorElem, y: TensorElem) -> TensorElem:
    x._check(y)
    t1 = x.pair.first.table
    t2 = x.pair.second.table
    out = [Fraction(0)] * 64
    for i, a in x.terms():
        s1, o1 = divmod(i, 8)
        for j, b in y.terms():
            s2, o2 = divmod(j, 8)
            sa, ia = t1[s1][s2]
            sb, ib = t2[o1][o2]
            out[8 * ia + ib] += sa * sb * a * b
    return TensorElem(x.pair, tuple(out))


def tconj(x: TensorElem) -> TensorElem:
    """Conjugate both tensor factors."""
    out = []
    for idx, c in enumerate(x.coeffs):
        s, o = divmod(idx, 8)
        sign = (1 if s == 0 else -1) * (1 if o == 0 else -1)
        out.append(sign * c)
    return TensorElem(x.pair, tuple(out))


def tinner(x: TensorElem, y: TensorElem) -> Fraction:
    """Product of the factor inner products, extended bilinearly."""
    x._check(y)
    norms = x.pair.inner_signature_diagonal()
    return sum((a * b * n for a, b, n in zip(x.coeffs, y.coeffs, norms)), Fraction(0))


@lru_cache(maxsize=None)
def _unit_left(spec: AlgebraSpec, a: int) -> RatMatrix:
    return left_mult_operator(spec.basis(a))


@lru_cache(maxsize=None)
def _unit_right(spec: AlgebraSpec, a: int) -> RatMatrix:
    return right_mult_operator(spec.basis(a))


def toperator(x: TensorElem) -> RatMatrix:
    """64x64 matrix of left multiplication by ``x``."""
    total = RatMatrix.zeros(64, 64)
    for idx, c in x.terms():
        s, o = divmod(idx, 8)
        total = total + _unit_left(x.pair.first, s).kron(_unit_left(x.pair.second, o)).scale(c)
    return total


def toperator_right(x: TensorElem) -> RatMatrix:
    """64x64 matrix of right multiplication by ``x``."""
    total = RatMatrix.zeros(64, 64)
    for idx, c in x.terms():
        s, o = divmod(idx, 8)
        total = total + _unit_right(x.pair.first, s).kron(_unit_right(x.pair.second, o)).scale(c)
    return total
