"""The Albert algebra H3(O) of 3x3 Hermitian octonionic matrices.

Coordinates are ``(z1, z2, z3, a, b, c)`` with real diagonal ``z`` and
octonions ``a = X[2,3]``, ``b = X[3,1]``, ``c = X[1,2]``; 27 rationals in
that order.  Operators on H3(O) are 27x27 matrices in these coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .composition import OCTONIONS, AlgElem, AlgebraSpec, conj, inner, mul
from .linalg import RatMatrix, solve

# positions of the off-diagonal coordinates: (row, col) of a, b, c
_OFF = ((1, 2), (2, 0), (0, 1))


def _zero(spec: AlgebraSpec = OCTONIONS) -> AlgElem:
    return spec.zero()


class OctMatrix:
    """A 3x3 matrix of octonions (not necessarily Hermitian)."""

    __slots__ = ("e",)

    def __init__(self, entries: Sequence[Sequence[AlgElem]]):
        self.e = [list(r) for r in entries]

    @classmethod
    def zeros(cls, spec: AlgebraSpec = OCTONIONS) -> "OctMatrix":
        return cls([[spec.zero() for _ in range(3)] for _ in range(3)])

    def __add__(self, other: "OctMatrix") -> "OctMatrix":
        return OctMatrix([[self.e[r][c] + other.e[r][c] for c in range(3)] for r in range(3)])

    def __sub__(self, other: "OctMatrix") -> "OctMatrix":
        return OctMatrix([[self.e[r][c] - other.e[r][c] for c in range(3)] for r in range(3)])

    def scale(self, s) -> "OctMatrix":
        s = Fraction(s)
        return OctMatrix([[x * s for x in row] for row in self.e])

    def __matmul__(self, other: "OctMatrix") -> "OctMatrix":
        out = []
        for r in range(3):
            row = []
            for c in range(3):
                acc = mul(self.e[r][0], other.e[0][c])
                acc = acc + mul(self.e[r][1], other.e[1][c]) + mul(self.e[r][2], other.e[2][c])
                row.append(acc)
            out.append(row)
        return OctMatrix(out)

    def dagger(self) -> "OctMatrix":
        return OctMatrix([[conj(self.e[c][r]) for c in range(3)] for r in range(3)])

    def trace(self) -> AlgElem:
        return self.e[0][0] + self.e[1][1] + self.e[2][2]

    def is_hermitian(self) -> bool:
        return all(self.e[r][c] == conj(self.e[c][r]) for r in range(3) for c in range(3))

    def is_antihermitian(self) -> bool:
        return all(self.e[r][c] == -conj(self.e[c][r]) for r in range(3) for c in range(3))

    def __eq__(self, other) -> bool:
        return isinstance(other, OctMatrix) and self.e == other.e

    def __repr__(self) -> str:
        return "OctMatrix(" + "; ".join(", ".join(str(x) for x in row) for row in self.e) + ")"


@dataclass(frozen=True)
class AlbertElem:
    z: tuple[Fraction, Fraction, Fraction]
    a: AlgElem
    b: AlgElem
    c: AlgElem

    @classmethod
    def from_coords(cls, v: Sequence, spec: AlgebraSpec = OCTONIONS) -> "AlbertElem":
        v = [Fraction(x) for x in v]
        if len(v) != 27:
            raise ValueError("an Albert element has 27 coordinates")
        return cls(tuple(v[:3]), spec.element(v[3:11]), spec.element(v[11:19]), spec.element(v[19:27]))

    @classmethod
    def diag(cls, z1, z2, z3, spec: AlgebraSpec = OCTONIONS) -> "AlbertElem":
        o = spec.zero()
        return cls((Fraction(z1), Fraction(z2), Fraction(z3)), o, o, o)

    @classmethod
    def identity(cls) -> "AlbertElem":
        return cls.diag(1, 1, 1)

    @classmethod
    def zero(cls) -> "AlbertElem":
        return cls.diag(0, 0, 0)

    @classmethod
    def basis(cls, n: int) -> "AlbertElem":
        v = [0] * 27
        v[n] = 1
        return cls.from_coords(v)

    @classmethod
    def from_matrix(cls, m: OctMatrix) -> "AlbertElem":
        if not m.is_hermitian():
            raise ValueError("matrix is not Hermitian")
        z = tuple(m.e[i][i].coeffs[0] for i in range(3))
        a, b, c = (m.e[r][col] for r, col in _OFF)
        return cls(z, a, b, c)

    def coords(self) -> list[Fraction]:
        return list(self.z) + list(self.a.coeffs) + list(self.b.coeffs) + list(self.c.coeffs)

    def matrix(self) -> OctMatrix:
        spec = self.a.spec
        d = [spec.one() * x for x in self.z]
        a, b, c = self.a, self.b, self.c
        return OctMatrix([[d[0], c, conj(b)], [conj(c), d[1], a], [b, conj(a), d[2]]])

    def __add__(self, other: "AlbertElem") -> "AlbertElem":
        return AlbertElem.from_coords([x + y for x, y in zip(self.coords(), other.coords())])

    def __sub__(self, other: "AlbertElem") -> "AlbertElem":
        return AlbertElem.from_coords([x - y for x, y in zip(self.coords(), other.coords())])

    def __neg__(self) -> "AlbertElem":
        return self * -1

    def __mul__(self, s) -> "AlbertElem":
        s = Fraction(s)
        return AlbertElem.from_coords([x * s for x in self.coords()])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords())

    def __str__(self) -> str:
        return f"Albert(z={[str(x) for x in self.z]}, a={self.a}, b={self.b}, c={self.c})"


BASIS_SIZE = 27
IDENTITY = AlbertElem.identity()


def albert_basis() -> list[AlbertElem]:
    return [AlbertElem.basis(n) for n in range(27)]


def basis_label(n: int) -> str:
    if n < 3:
        return f"E{n + 1}{n + 1}"
    slot, unit = divmod(n - 3, 8)
    return f"{'abc'[slot]}:{OCTONIONS.names[unit]}"


def random_albert(rng: random.Random, bound: int = 10, density: float = 1.0) -> AlbertElem:
    """Small random rational element (numerators and denominators up to ``bound``)."""
    v = []
    for _ in range(27):
        if rng.random() < density:
            v.append(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        else:
            v.append(Fraction(0))
    return AlbertElem.from_coords(v)


# ---------------------------------------------------------------------------
# products


def trace(X: AlbertElem) -> Fraction:
    return X.z[0] + X.z[1] + X.z[2]


def jordan_matrix(X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    """X o Y = (XY + YX)/2 with octonionic entry products."""
    mx, my = X.matrix(), Y.matrix()
    return AlbertElem.from_matrix((mx @ my + my @ mx).scale(Fraction(1, 2)))


@lru_cache(maxsize=1)
def _jordan_constants() -> list[list[list[tuple[int, Fraction]]]]:
    basis = albert_basis()
    sc = [[[] for _ in range(27)] for _ in range(27)]
    for i in range(27):
        for j in range(i, 27):
            v = jordan_matrix(basis[i], basis[j]).coords()
            terms = [(k, x) for k, x in enumerate(v) if x]
            sc[i][j] = sc[j][i] = terms
    return sc


def jordan(X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    """Jordan product, bilinear over the structure constants of ``jordan_matrix``."""
    sc = _jordan_constants()
    xs = [(i, x) for i, x in enumerate(X.coords()) if x]
    ys = [(j, y) for j, y in enumerate(Y.coords()) if y]
    out = [Fraction(0)] * 27
    for i, x in xs:
        row = sc[i]
        for j, y in ys:
            xy = x * y
            for k, c in row[j]:
                out[k] += xy * c
    return AlbertElem.from_coords(out)


def trace_form(X: AlbertElem, Y: AlbertElem) -> Fraction:
    return trace(jordan(X, Y))


def trace_form_fast(X: AlbertElem, Y: AlbertElem) -> Fraction:
    """Same value as ``trace_form``, from the coordinates directly."""
    s = X.z[0] * Y.z[0] + X.z[1] * Y.z[1] + X.z[2] * Y.z[2]
    return s + 2 * (inner(X.a, Y.a) + inner(X.b, Y.b) + inner(X.c, Y.c))


def freudenthal(X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    tx, ty = trace(X), trace(Y)
    half = Fraction(1, 2)
    out = jordan(X, Y) - (Y * tx + X * ty) * half
    return out + IDENTITY * (half * (tx * ty - trace_form(X, Y)))


def det(X: AlbertElem) -> Fraction:
    return trace_form(freudenthal(X, X), X) / 3


def tracefree_split(X: AlbertElem) -> tuple[AlbertElem, Fraction]:
    t = trace(X)
    return X - IDENTITY * (t / 3), t


@lru_cache(maxsize=1)
def gram() -> RatMatrix:
    """Gram matrix of the trace form in Albert coordinates."""
    return RatMatrix.diag([1, 1, 1] + [2] * 24)


# ---------------------------------------------------------------------------
# e6 operators


def _apply_matrix(M: RatMatrix, X: AlbertElem) -> AlbertElem:
    return AlbertElem.from_coords(M.apply(X.coords()))


def _operator_from_map(f) -> RatMatrix:
    cols = [f(AlbertElem.basis(n)).coords() for n in range(27)]
    return RatMatrix.from_rows([[cols[c][r] for c in range(27)] for r in range(27)])


class E6Operator:
    """Linear operator on H3(O) together with its dual.

    The dual is minus the adjoint for the trace form, which is the
    generator-level rule ``phi' = -phi^dagger`` for matrix generators and
    makes sense for nested (commutator) elements as well.
    """

    __slots__ = ("matrix", "_dual")

    def __init__(self, matrix: RatMatrix):
        if matrix.shape != (27, 27):
            raise ValueError("an e6 operator is a 27x27 matrix")
        self.matrix = matrix
        self._dual = None

    @classmethod
    def zero(cls) -> "E6Operator":
        return cls(RatMatrix.zeros(27, 27))

    @classmethod
    def from_generator(cls, phi: OctMatrix) -> "E6Operator":
        return cls(_operator_from_map(lambda X: e6_apply(phi, X)))

    @property
    def dual(self) -> "E6Operator":
        if self._dual is None:
            G = gram()
            Ginv = RatMatrix.diag([1, 1, 1] + [Fraction(1, 2)] * 24)
            self._dual = E6Operator((Ginv @ self.matrix.T @ G).scale(-1))
        return self._dual

    def __call__(self, X: AlbertElem) -> AlbertElem:
        return _apply_matrix(self.matrix, X)

    def __add__(self, other: "E6Operator") -> "E6Operator":
        return E6Operator(self.matrix + other.matrix)

    def __sub__(self, other: "E6Operator") -> "E6Operator":
        return E6Operator(self.matrix - other.matrix)

    def __neg__(self) -> "E6Operator":
        return E6Operator(self.matrix.scale(-1))

    def scale(self, s) -> "E6Operator":
        return E6Operator(self.matrix.scale(s))

    __mul__ = scale
    __rmul__ = scale

    def commutator(self, other: "E6Operator") -> "E6Operator":
        return E6Operator(self.matrix.commutator(other.matrix))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, E6Operator) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def preserves_det_infinitesimally(self, X: AlbertElem) -> bool:
        """tr((X*X) o phi(X)) = 0, the derivative of det along phi."""
        return trace_form(freudenthal(X, X), self(X)) == 0


def e6_apply(phi, X: AlbertElem) -> AlbertElem:
    """phi X + X phi^dagger for a tracefree generator, or an E6Operator applied to X."""
    if isinstance(phi, E6Operator):
        return phi(X)
    tr = phi.trace()
    if tr.coeffs[0] != 0:
        raise ValueError("e6 generators must be tracefree")
    m = X.matrix()
    return AlbertElem.from_matrix(phi @ m + m @ phi.dagger())


def generator(entries: dict, spec: AlgebraSpec = OCTONIONS) -> OctMatrix:
    """3x3 octonionic matrix from ``{(r, c): AlgElem}`` (0-based positions)."""
    m = OctMatrix.zeros(spec)
    for (r, c), v in entries.items():
        m.e[r][c] = v
    return m


def rotation_offdiag(slot: int, x: AlgElem) -> OctMatrix:
    """Anti-Hermitian generator with ``x`` at the slot position and ``-conj(x)`` opposite."""
    r, c = _OFF[slot]
    return generator({(r, c): x, (c, r): -conj(x)})


def boost_offdiag(slot: int, x: AlgElem) -> OctMatrix:
    r, c = _OFF[slot]
    return generator({(r, c): x, (c, r): conj(x)})


def diagonal_generator(d: Sequence[AlgElem]) -> OctMatrix:
    return generator({(i, i): d[i] for i in range(3)})


# ---------------------------------------------------------------------------
# <A, B>


def cross_operator(A: AlbertElem, B: AlbertElem) -> E6Operator:
    """<A,B>: X -> B o (A o X) - A o (B o X) - (A o B) o X + tr(A o B) X / 3."""
    t = trace_form(A, B) / 3
    AB = jordan(A, B)

    def f(X):
        return jordan(B, jordan(A, X)) - jordan(A, jordan(B, X)) - jordan(AB, X) + X * t

    return E6Operator(_operator_from_map(f))


def cross_operator_alt(A: AlbertElem, B: AlbertElem) -> E6Operator:
    """<A,B>: X -> 2 B*(A*X) - tr(B o X) A / 2 - tr(A o B) X / 6."""
    t = trace_form(A, B) / 6

    def f(X):
        return freudenthal(B, freudenthal(A, X)) * 2 - A * (trace_form(B, X) / 2) - X * t

    return E6Operator(_operator_from_map(f))


def describe_operator_span(ops: Sequence[E6Operator]) -> int:
    """Dimension of the span of operators (as 729-vectors)."""
    from .linalg import row_space_rank

    rows = []
    for op in ops:
        row = {}
        for r, rd in enumerate(op.matrix.rows):
            for c, v in rd.items():
                row[27 * r + c] = v
        rows.append(row)
    return row_space_rank(rows, 729)


def solve_operator(ops: Sequence[E6Operator], target: E6Operator) -> list[Fraction] | None:
    """Coefficients expressing ``target`` in the span of ``ops``, if any."""
    cols = []
    for op in ops:
        cols.append([op.matrix[r, c] for r in range(27) for c in range(27)])
    A = RatMatrix.from_rows([[cols[j][i] for j in range(len(ops))] for i in range(729)])
    b = [target.matrix[r, c] for r in range(27) for c in range(27)]
    return solve(A, b)
