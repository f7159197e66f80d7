"""Exact rational linear algebra.

Matrices are stored as sparse rows (``dict`` column -> ``Fraction``).  Dense
elimination uses fraction-free (Bareiss) integer arithmetic; large sparse
kernels use an incremental reduced row echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

Vector = list  # list of Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatMatrix:
    """Immutable-by-convention sparse rational matrix."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: list[dict[int, Fraction]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            rows.append({c: _frac(v) for c, v in enumerate(r) if v})
        return cls(nrows, ncols, rows)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Mapping[tuple[int, int], object]) -> "RatMatrix":
        rows = [dict() for _ in range(nrows)]
        for (r, c), v in entries.items():
            if v:
                rows[r][c] = _frac(v)
        return cls(nrows, ncols, rows)

    @classmethod
    def from_sparse_rows(cls, ncols: int, rows: Iterable[Mapping[int, object]]) -> "RatMatrix":
        out = [{c: _frac(v) for c, v in r.items() if v} for r in rows]
        return cls(len(out), ncols, out)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls(nrows, ncols)

    @classmethod
    def diag(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls(n, n, [({i: _frac(v)} if v else {}) for i, v in enumerate(values)])

    # access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        r, c = key
        return self.rows[r].get(c, Fraction(0))

    def to_rows(self) -> list[list[Fraction]]:
        return [[row.get(c, Fraction(0)) for c in range(self.ncols)] for row in self.rows]

    def column(self, c: int) -> list[Fraction]:
        return [row.get(c, Fraction(0)) for row in self.rows]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self):
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                yield r, c, v

    def __repr__(self) -> str:
        return f"RatMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, tuple(tuple(sorted(r.items())) for r in self.rows)))

    def is_zero(self) -> bool:
        return not any(self.rows)

    # arithmetic -----------------------------------------------------------
    def _combine(self, other: "RatMatrix", sign: int) -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = []
        for a, b in zip(self.rows, other.rows):
            row = dict(a)
            for c, v in b.items():
                s = row.get(c, 0) + sign * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
            rows.append(row)
        return RatMatrix(self.nrows, self.ncols, rows)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return RatMatrix(self.nrows, self.ncols, [{c: -v for c, v in r.items()} for r in self.rows])

    def scale(self, s) -> "RatMatrix":
        s = _frac(s)
        if not s:
            return RatMatrix.zeros(self.nrows, self.ncols)
        return RatMatrix(self.nrows, self.ncols, [{c: s * v for c, v in r.items()} for r in self.rows])

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            rows = []
            orows = other.rows
            for a in self.rows:
                acc: dict[int, Fraction] = {}
                for k, v in a.items():
                    for c, w in orows[k].items():
                        acc[c] = acc.get(c, 0) + v * w
                rows.append({c: v for c, v in acc.items() if v})
            return RatMatrix(self.nrows, other.ncols, rows)
        return self.apply(other)

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum((v * vec[c] for c, v in row.items()), Fraction(0)) for row in self.rows]

    def commutator(self, other: "RatMatrix") -> "RatMatrix":
        return self @ other - other @ self

    @property
    def T(self) -> "RatMatrix":
        rows = [dict() for _ in range(self.ncols)]
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                rows[c][r] = v
        return RatMatrix(self.ncols, self.nrows, rows)

    def trace(self) -> Fraction:
        return sum((row.get(i, Fraction(0)) for i, row in enumerate(self.rows)), Fraction(0))

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        rows = []
        for a in self.rows:
            for b in other.rows:
                rows.append(
                    {i * other.ncols + j: v * w for i, v in a.items() for j, w in b.items()}
                )
        return RatMatrix(self.nrows * other.nrows, self.ncols * other.ncols, rows)

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                if self.rows[c].get(r, 0) != v:
                    return False
        return True

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        cmap = {c: j for j, c in enumerate(cols)}
        out = []
        for r in rows:
            out.append({cmap[c]: v for c, v in self.rows[r].items() if c in cmap})
        return RatMatrix(len(rows), len(cols), out)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "RatMatrix":
        """Matrix with rows ``row_perm`` and columns ``col_perm`` of self."""
        return self.submatrix(row_perm, col_perm)

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return RatMatrix(self.nrows + other.nrows, self.ncols, [dict(r) for r in self.rows + other.rows])

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row mismatch")
        n = self.ncols
        rows = []
        for a, b in zip(self.rows, other.rows):
            row = dict(a)
            row.update({n + c: v for c, v in b.items()})
            rows.append(row)
        return RatMatrix(self.nrows, self.ncols + other.ncols, rows)


# ---------------------------------------------------------------------------
# fraction-free dense elimination


def _integer_rows(A: RatMatrix, extra: Sequence | None = None) -> list[list[int]]:
    out = []
    for r, row in enumerate(A.rows):
        vals = [row.get(c, Fraction(0)) for c in range(A.ncols)]
        if extra is not None:
            vals.append(_frac(extra[r]))
        den = lcm(*(v.denominator for v in vals)) if vals else 1
        out.append([int(v * den) for v in vals])
    return out


def bareiss_echelon(M: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix (modified in place).

    Returns the echelon rows and the pivot columns.
    """
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, nrows):
            mic = M[i][c]
            row_i = M[i]
            row_r = M[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots


def solve(A: RatMatrix, b: Sequence) -> list[Fraction] | None:
    """Exact solution of ``A x = b`` (one particular solution), or ``None``."""
    if len(b) != A.nrows:
        raise ValueError("right-hand side length mismatch")
    M, pivots = bareiss_echelon(_integer_rows(A, b))
    n = A.ncols
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = M[r]
        s = Fraction(row[n]) - sum((row[j] * x[j] for j in pivots[r + 1:]), Fraction(0))
        x[c] = s / row[c]
    return x


def inverse(A: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination; ValueError if singular."""
    n = A.nrows
    if A.ncols != n:
        raise ValueError("inverse of a non-square matrix")
    M = [[A[r, c] for c in range(n)] + [Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for r in range(n):
            f = M[r][c]
            if r != c and f:
                rc = M[c]
                M[r] = [a - f * b for a, b in zip(M[r], rc)]
    return RatMatrix.from_rows([row[n:] for row in M])


def rank_dense(A: RatMatrix) -> int:
    if A.nrows == 0 or A.ncols == 0:
        return 0
    _, pivots = bareiss_echelon(_integer_rows(A))
    return len(pivots)


# ---------------------------------------------------------------------------
# sparse incremental reduced row echelon form


class SparseRowReducer:
    """Maintains an exact RREF of the rows added so far.

    ``add`` returns True when the new row increases the rank.  Pivot rows
    are kept fully reduced, so reducing a new row only touches the pivot
    columns it hits.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: Mapping[int, object]) -> dict[int, Fraction]:
        r = {c: _frac(v) for c, v in row.items() if v}
        for c in [c for c in r if c in self.pivot_rows]:
            v = r.get(c)
            if not v:
                continue
            for cc, w in self.pivot_rows[c].items():
                s = r.get(cc, 0) - v * w
                if s:
                    r[cc] = s
                else:
                    r.pop(cc, None)
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for prow in self.pivot_rows.values():
            v = prow.get(p)
            if v:
                for cc, w in r.items():
                    s = prow.get(cc, 0) - v * w
                    if s:
                        prow[cc] = s
                    else:
                        prow.pop(cc, None)
        self.pivot_rows[p] = r
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)

    def kernel(self) -> list[list[Fraction]]:
        """Basis of the null space of the accumulated rows."""
        free = [c for c in range(self.ncols) if c not in self.pivot_rows]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, prow in self.pivot_rows.items():
                w = prow.get(f)
                if w:
                    v[p] = -w
            basis.append(v)
        return basis

    def basis_rows(self) -> list[dict[int, Fraction]]:
        return [self.pivot_rows[p] for p in sorted(self.pivot_rows)]


class SpanCoordinates:
    """Exact coordinates of vectors over an independent family of sparse rows.

    Each pivot row keeps the combination of accepted generators it came
    from, so ``coordinates(v)`` returns the expansion of ``v`` over the
    family (or None when ``v`` is outside its span).
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.count = 0
        self.pivots: dict[int, tuple[dict[int, Fraction], dict[int, Fraction]]] = {}

    def _reduce(self, row: Mapping[int, object]) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
        r = {c: _frac(v) for c, v in row.items() if v}
        tag: dict[int, Fraction] = {}
        for c in sorted(c for c in r if c in self.pivots):
            v = r.get(c)
            if not v:
                continue
            prow, ptag = self.pivots[c]
            for cc, w in prow.items():
                s = r.get(cc, 0) - v * w
                if s:
                    r[cc] = s
                else:
                    r.pop(cc, None)
            for g, w in ptag.items():
                s = tag.get(g, 0) + v * w
                if s:
                    tag[g] = s
                else:
                    tag.pop(g, None)
        return r, tag

    def add(self, row: Mapping[int, object]) -> bool:
        """Accept ``row`` as generator number ``count`` if it is independent."""
        r, tag = self._reduce(row)
        if not r:
            return False
        tag = {g: -w for g, w in tag.items()}
        tag[self.count] = Fraction(1)
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        tag = {g: v * inv for g, v in tag.items()}
        for q, (prow, ptag) in self.pivots.items():
            v = prow.get(p)
            if not v:
                continue
            for cc, w in r.items():
                s = prow.get(cc, 0) - v * w
                if s:
                    prow[cc] = s
                else:
                    prow.pop(cc, None)
            for g, w in tag.items():
                s = ptag.get(g, 0) - v * w
                if s:
                    ptag[g] = s
                else:
                    ptag.pop(g, None)
        self.pivots[p] = (r, tag)
        self.count += 1
        return True

    @property
    def rank(self) -> int:
        return self.count

    def coordinates(self, row: Mapping[int, object]) -> dict[int, Fraction] | None:
        r, tag = self._reduce(row)
        return None if r else tag


def _reducer_for(A: RatMatrix) -> SparseRowReducer:
    red = SparseRowReducer(A.ncols)
    for row in A.rows:
        if row:
            red.add(row)
    return red


def rank(A: RatMatrix) -> int:
    if A.nrows * A.ncols <= 64 * 64:
        return rank_dense(A)
    return _reducer_for(A).rank


def kernel(A: RatMatrix) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``."""
    return _reducer_for(A).kernel()


def row_space_rank(rows: Iterable[Mapping[int, object]], ncols: int) -> int:
    red = SparseRowReducer(ncols)
    for row in rows:
        red.add(row)
    return red.rank


# ---------------------------------------------------------------------------
# symmetric congruence diagonalization


def congruence_diagonal(S: RatMatrix) -> list[Fraction]:
    """Diagonal entries of a matrix congruent to symmetric ``S``.

    Symmetric elimination: pivot on a nonzero diagonal entry when there is
    one; otherwise replace ``e_i`` by ``e_i + e_j`` for a pair with nonzero
    off-diagonal entry, which makes the new diagonal entry nonzero.
    """
    if not S.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    M: dict[int, dict[int, Fraction]] = {i: dict(row) for i, row in enumerate(S.rows)}
    remaining = set(range(S.nrows))
    diag: list[Fraction] = []

    def set_sym(a: int, b: int, v: Fraction) -> None:
        if v:
            M[a][b] = v
            M[b][a] = v
        else:
            M[a].pop(b, None)
            M[b].pop(a, None)

    while remaining:
        p = next((i for i in sorted(remaining) if M[i].get(i)), None)
        if p is None:
            pair = next(
                ((i, j) for i in sorted(remaining) for j in sorted(M[i]) if j != i), None
            )
            if pair is None:
                diag.extend([Fraction(0)] * len(remaining))
                break
            i, j = pair
            sii = 2 * M[i][j] + M[j].get(j, 0)
            for k in set(M[i]) | set(M[j]):
                if k in (i, j):
                    continue
                set_sym(i, k, M[i].get(k, 0) + M[j].get(k, 0))
            set_sym(i, j, M[i][j] + M[j].get(j, 0))
            M[i][i] = sii
            p = i
        piv = M[p][p]
        nbrs = {c: v for c, v in M[p].items() if c != p}
        for r, v in nbrs.items():
            f = v / piv
            rr = M[r]
            for c, w in nbrs.items():
                t = rr.get(c, 0) - f * w
                if t:
                    rr[c] = t
                else:
                    rr.pop(c, None)
            rr.pop(p, None)
        M[p] = {}
        remaining.discard(p)
        diag.append(piv)
    return diag


def signature(S: RatMatrix) -> tuple[int, int, int]:
    """``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix."""
    d = congruence_diagonal(S)
    return (sum(1 for x in d if x > 0), sum(1 for x in d if x < 0), sum(1 for x in d if x == 0))


# ---------------------------------------------------------------------------
# eigenspaces for known rational candidates


def integer_eigenspaces(A: RatMatrix, candidates: Sequence) -> tuple[list[tuple[Fraction, int, list[list[Fraction]]]], int]:
    """Kernels of ``A - lambda I`` for each candidate.

    Returns ``([(lambda, multiplicity, basis), ...], residual)`` where the
    residual is the dimension not accounted for by the candidates.
    """
    if A.nrows != A.ncols:
        raise ValueError("square matrix required")
    n = A.nrows
    out = []
    total = 0
    for lam in candidates:
        lam = _frac(lam)
        shifted = A - RatMatrix.identity(n).scale(lam) if lam else A
        basis = kernel(shifted)
        out.append((lam, len(basis), basis))
        total += len(basis)
    return out, n - total
