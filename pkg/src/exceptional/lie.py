"""Structure-constant tables and the linear algebra built on them.

Everything here only needs the table ``c[i, j] = {k: c_ij^k}`` (i < j), so
it applies to any of the three real forms.  Heavy matrix work runs on
integer ``scipy.sparse`` matrices after clearing the common denominator,
with an explicit overflow bound; exact rational arithmetic takes over
whenever the bound is not met.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from .linalg import RatMatrix, SparseRowReducer, integer_eigenspaces, signature

Sparse = dict  # int -> Fraction

_LIMIT = 1 << 62


def _axpy(out: dict, c, v: Mapping) -> dict:
    for k, x in v.items():
        s = out.get(k, 0) + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def format_rational(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


class StructureTable:
    """Immutable table of brackets of basis elements."""

    def __init__(self, pair: str, names: Sequence[str], entries: Mapping[tuple[int, int], Mapping[int, Fraction]]):
        self.pair = pair
        self.names = list(names)
        self.dim = len(self.names)
        self.entries: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), r in entries.items():
            if i >= j:
                raise ValueError("table keys must satisfy i < j")
            r = {int(k): Fraction(v) for k, v in r.items() if v}
            if r:
                self.entries[(int(i), int(j))] = r
        self._rows: list[dict[int, dict[int, Fraction]]] = [dict() for _ in range(self.dim)]
        for (i, j), r in self.entries.items():
            self._rows[i][j] = r
            self._rows[j][i] = {k: -v for k, v in r.items()}
        den = 1
        for r in self.entries.values():
            for v in r.values():
                den = lcm(den, v.denominator)
        self.den = den
        self._ad_int = None
        self._killing = None

    # -- brackets

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return dict(self._rows[i].get(j, {}))

    def bracket(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in u.items():
            row = self._rows[i]
            for j, b in v.items():
                r = row.get(j)
                if r:
                    _axpy(out, a * b, r)
        return out

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, StructureTable) and self.pair == other.pair and self.names == other.names and self.entries == other.entries

    # -- serialization

    def to_json_obj(self) -> dict:
        brackets = []
        for (i, j) in sorted(self.entries):
            r = self.entries[(i, j)]
            brackets.append({"i": i, "j": j, "terms": [{"k": k, "c": format_rational(r[k])} for k in sorted(r)]})
        return {"pair": self.pair, "basis": list(self.names), "brackets": brackets}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), ensure_ascii=False, separators=(",", ":"))

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "StructureTable":
        entries = {}
        for b in obj["brackets"]:
            entries[(int(b["i"]), int(b["j"]))] = {int(t["k"]): parse_rational(t["c"]) for t in b["terms"]}
        return cls(obj["pair"], obj["basis"], entries)

    @classmethod
    def from_json(cls, text: str) -> "StructureTable":
        return cls.from_json_obj(json.loads(text))

    def save(self, path) -> str:
        text = self.to_json()
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    @classmethod
    def load(cls, path, expected_hash: str | None = None) -> "StructureTable":
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        table = cls.from_json(text)
        if expected_hash is not None and table.content_hash() != expected_hash:
            raise ValueError(f"content hash mismatch for {path}")
        return table

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "k", "c", "name_i", "name_j", "name_k"])
        for (i, j) in sorted(self.entries):
            r = self.entries[(i, j)]
            for k in sorted(r):
                w.writerow([i, j, k, format_rational(r[k]), self.names[i], self.names[j], self.names[k]])
        return buf.getvalue()

    def corrupted(self, i: int, j: int, k: int | None = None) -> "StructureTable":
        """Copy with one structure constant negated (a negative control)."""
        entries = {key: dict(r) for key, r in self.entries.items()}
        key = (min(i, j), max(i, j))
        r = entries[key]
        k = min(r) if k is None else k
        r[k] = -r[k]
        return StructureTable(self.pair, self.names, entries)

    # -- adjoint matrices

    def ad_basis_int(self) -> list[sp.csr_matrix]:
        """``den * ad(e_i)`` as integer sparse matrices, ``ad(e_i)[k, j] = c_ij^k``."""
        if self._ad_int is None:
            n, den = self.dim, self.den
            mats = []
            for i in range(n):
                R, C, V = [], [], []
                for j, r in self._rows[i].items():
                    for k, c in r.items():
                        R.append(k)
                        C.append(j)
                        V.append(int(c * den))
                mats.append(sp.csr_matrix((V, (R, C)), shape=(n, n), dtype=np.int64))
            self._ad_int = mats
        return self._ad_int

    def ad_matrix(self, u: Mapping[int, Fraction]) -> RatMatrix:
        rows = [dict() for _ in range(self.dim)]
        for i, a in u.items():
            for j, r in self._rows[i].items():
                for k, c in r.items():
                    s = rows[k].get(j, 0) + a * c
                    if s:
                        rows[k][j] = s
                    else:
                        rows[k].pop(j, None)
        return RatMatrix(self.dim, self.dim, rows)

    def killing_matrix(self) -> RatMatrix:
        """``K[a, b] = tr(ad e_a ad e_b)``, exact."""
        if self._killing is None:
            n, den = self.dim, self.den
            big = max((abs(int(c * den)) for r in self.entries.values() for c in r.values()), default=0)
            # each entry is a sum of at most n*n products
            if big * big * n * n >= _LIMIT:
                K = self._killing_exact()
            else:
                AR, AC, AV, BR, BC = [], [], [], [], []
                for (i, j), r in self.entries.items():
                    for k, c in r.items():
                        v = int(c * den)
                        # A[i, k*n + j] = ad_i[k, j];  B[j, j*n + k] = ad_j[j, k] read as pattern
                        AR += [i, j]
                        AC += [k * n + j, k * n + i]
                        AV += [v, -v]
                        BR += [i, j]
                        BC += [j * n + k, i * n + k]
                A = sp.csr_matrix((AV, (AR, AC)), shape=(n, n * n), dtype=np.int64)
                B = sp.csr_matrix((AV, (BR, BC)), shape=(n, n * n), dtype=np.int64)
                Kint = (A @ B.T).toarray()
                d2 = den * den
                K = RatMatrix.from_rows([[Fraction(int(Kint[a, b]), d2) for b in range(n)] for a in range(n)])
            self._killing = K
        return self._killing

    def _killing_exact(self) -> RatMatrix:
        n = self.dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                s = Fraction(0)
                for j, r in self._rows[a].items():
                    for k, c in r.items():
                        t = self._rows[b].get(k, {}).get(j)
                        if t:
                            s += c * t
                out[a][b] = out[b][a] = s
        return RatMatrix.from_rows(out)

    def killing(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Fraction:
        K = self.killing_matrix()
        s = Fraction(0)
        for a, x in u.items():
            row = K.rows[a]
            for b, y in v.items():
                w = row.get(b)
                if w:
                    s += x * y * w
        return s

    def signature(self) -> tuple[int, int, int]:
        return signature(self.killing_matrix())


# ---------------------------------------------------------------------------
# Jacobi identity


@dataclass
class JacobiReport:
    mode: str
    checked: int
    violations: int
    first: tuple[int, int, int] | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.violations == 0


def jacobiator(table: StructureTable, a: int, b: int, c: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        _axpy(out, 1, table.bracket(table.basis_bracket(x, y), {z: Fraction(1)}))
    return out


def jacobi_full(table: StructureTable) -> JacobiReport:
    """All unordered basis triples, through ad[e_i, e_j] = [ad e_i, ad e_j].

    Column ``k`` of ``[ad e_i, ad e_j] - ad [e_i, e_j]`` is the Jacobiator of
    ``(e_i, e_j, e_k)``, which is totally antisymmetric; a violating
    unordered triple is counted once, at i < j < k.
    """
    import time

    t0 = time.perf_counter()
    n, den = table.dim, table.den
    ad = table.ad_basis_int()
    big = max((abs(int(c * den)) for r in table.entries.values() for c in r.values()), default=0)
    if n * big * big * den >= _LIMIT:
        return _jacobi_exact(table)
    violations, first = 0, None
    for i in range(n):
        for j in range(i + 1, n):
            lhs = (ad[i] @ ad[j] - ad[j] @ ad[i]) * den
            r = table.entries.get((i, j))
            if r:
                for k, c in r.items():
                    lhs = lhs - ad[k] * int(c * den * den)
            lhs.eliminate_zeros()
            if lhs.nnz:
                cols = sorted(set(int(k) for k in lhs.indices if k > j))
                violations += len(cols)
                if cols and first is None:
                    first = (i, j, cols[0])
    checked = n * (n - 1) * (n - 2) // 6
    return JacobiReport("full", checked, violations, first, time.perf_counter() - t0)


def _jacobi_exact(table: StructureTable) -> JacobiReport:
    n = table.dim
    violations, first = 0, None
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if jacobiator(table, a, b, c):
                    violations += 1
                    first = first or (a, b, c)
    return JacobiReport("full", n * (n - 1) * (n - 2) // 6, violations, first)


def jacobi_sample(table: StructureTable, n: int = 100_000, seed: int = 1) -> JacobiReport:
    import time

    t0 = time.perf_counter()
    rng = random.Random(seed)
    d = table.dim
    violations, first = 0, None
    for _ in range(n):
        a, b, c = rng.sample(range(d), 3)
        if jacobiator(table, a, b, c):
            violations += 1
            first = first or tuple(sorted((a, b, c)))
    return JacobiReport(f"sample({n}, seed={seed})", n, violations, first, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Exact subspace of the algebra, kept in reduced row echelon form."""

    def __init__(self, dim: int, vectors: Iterable[Mapping[int, object]] = ()):
        self.n = dim
        self._red = SparseRowReducer(dim)
        for v in vectors:
            self.add(v)

    def add(self, v: Mapping[int, object]) -> bool:
        return self._red.add(v)

    def contains(self, v: Mapping[int, object]) -> bool:
        return self._red.contains(v)

    @property
    def dim(self) -> int:
        return self._red.rank

    def basis(self) -> list[dict[int, Fraction]]:
        return [dict(r) for r in self._red.basis_rows()]

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis())


def span(dim: int, vectors: Iterable[Mapping[int, object]]) -> Subspace:
    return Subspace(dim, vectors)


@dataclass
class ClosureReport:
    closed: bool
    dim: int
    generated_dim: int | None = None
    witness: tuple[dict, dict] | None = None


def subalgebra_closure(table: StructureTable, vectors: Sequence[Mapping[int, object]], generate: bool = False,
                       max_dim: int | None = None) -> ClosureReport:
    """Is the span of ``vectors`` closed under the bracket?

    With ``generate`` the generated subalgebra is also built, up to ``max_dim``.
    """
    S = Subspace(table.dim, vectors)
    basis = S.basis()
    witness = None
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            z = table.bracket(basis[a], basis[b])
            if z and not S.contains(z):
                witness = (basis[a], basis[b])
                break
        if witness:
            break
    report = ClosureReport(witness is None, S.dim, None, witness)
    if generate:
        G = Subspace(table.dim, basis)
        cur = G.basis()
        frontier = list(cur)
        limit = max_dim or table.dim
        while frontier and G.dim < limit:
            new = []
            for x in frontier:
                for y in list(G.basis()):
                    z = table.bracket(x, y)
                    if z and G.add(z):
                        new.append(z)
                        if G.dim >= limit:
                            break
                if G.dim >= limit:
                    break
            frontier = new
        report.generated_dim = G.dim
    return report


def centralizer(table: StructureTable, vectors: Sequence[Mapping[int, object]]) -> list[dict[int, Fraction]]:
    """Basis of ``{x : [w, x] = 0 for all w}``."""
    red = SparseRowReducer(table.dim)
    for w in Subspace(table.dim, vectors).basis():
        A = table.ad_matrix(w)
        for row in A.rows:
            if row and red.rank < table.dim:
                red.add(row)
    return [{k: v for k, v in enumerate(vec) if v} for vec in red.kernel()]


# ---------------------------------------------------------------------------
# eigenspaces and gradings


@dataclass
class EigenPiece:
    value: Fraction
    dim: int
    basis: list[dict[int, Fraction]] = field(repr=False, default_factory=list)


@dataclass
class EigenReport:
    pieces: list[EigenPiece]
    residual: int

    def dims(self) -> dict[Fraction, int]:
        return {p.value: p.dim for p in self.pieces}


def eigen_decomposition(table: StructureTable, h: Mapping[int, object], candidates: Iterable) -> EigenReport:
    A = table.ad_matrix({k: Fraction(v) for k, v in h.items()})
    res, residual = integer_eigenspaces(A, list(candidates))
    pieces = [EigenPiece(lam, m, [{k: v for k, v in enumerate(b) if v} for b in basis]) for lam, m, basis in res]
    return EigenReport(pieces, residual)


def restricted_eigenspaces(table: StructureTable, h: Mapping[int, object], subspace: Sequence[Mapping[int, object]],
                           candidates: Iterable) -> EigenReport:
    """Eigenspaces of ad(h) restricted to an ad(h)-invariant subspace."""
    S = Subspace(table.dim, subspace)
    basis = S.basis()
    pivots = [min(v) for v in basis]
    # coordinates of ad(h) b in the echelon basis are its pivot entries
    cols = []
    for b in basis:
        z = table.bracket(dict(h), b)
        if z and not S.contains(z):
            raise ValueError("subspace is not invariant under ad(h)")
        cols.append([z.get(p, Fraction(0)) for p in pivots])
    m = len(basis)
    M = RatMatrix.from_rows([[cols[c][r] for c in range(m)] for r in range(m)]) if m else RatMatrix(0, 0)
    res, residual = integer_eigenspaces(M, list(candidates))
    pieces = []
    for lam, mult, vecs in res:
        full = []
        for coeffs in vecs:
            v: dict[int, Fraction] = {}
            for c, b in zip(coeffs, basis):
                if c:
                    _axpy(v, c, b)
            full.append(v)
        pieces.append(EigenPiece(lam, mult, full))
    return EigenReport(pieces, residual)


@dataclass
class GradingReport:
    dims: dict
    expected: dict | None
    dims_ok: bool
    law_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.dims_ok and self.law_ok


def _int_columns(vectors: Sequence[Mapping[int, Fraction]], n: int) -> np.ndarray:
    """Vectors as integer columns, each scaled by the lcm of its denominators."""
    M = np.zeros((n, len(vectors)), dtype=object)
    for c, v in enumerate(vectors):
        d = 1
        for x in v.values():
            d = lcm(d, x.denominator)
        for k, x in v.items():
            M[k, c] = int(x * d)
    return M


def _exact_product(X: sp.csr_matrix, P: np.ndarray) -> np.ndarray:
    """``X @ P`` exactly; int64 when the bound allows, Python integers otherwise."""
    bx = int(np.abs(X.data).max(initial=0)) if X.nnz else 0
    bp = max((abs(int(v)) for v in P.reshape(-1)), default=0)
    if bx * bp * X.shape[1] < _LIMIT:
        return np.asarray(X @ P.astype(np.int64)).astype(object)
    return X.toarray().astype(object) @ P


def grading_check(table: StructureTable, hs: Sequence[Mapping[int, object]], pieces: Mapping[tuple, Sequence[Mapping[int, Fraction]]],
                  expected: Mapping | None = None) -> GradingReport:
    """Check ``[g_a, g_b] in g_{a+b}`` for a grading by commuting ad(h_t).

    ``pieces`` maps a weight tuple to a basis of its piece.  ``z`` lies in
    ``g_w`` iff ``ad(h_t) z = w_t z`` for every t; when ``w`` is not a
    weight this forces ``z = 0``.
    """
    dims = {w: len(b) for w, b in pieces.items()}
    dims_ok = expected is None or dims == dict(expected)
    n, den = table.dim, table.den
    ad = table.ad_basis_int()
    H = []
    for h in hs:
        hd = 1
        for v in h.values():
            hd = lcm(hd, Fraction(v).denominator)
        Hm = sp.csr_matrix((n, n), dtype=np.int64)
        for k, v in h.items():
            Hm = Hm + ad[k] * int(Fraction(v) * hd)
        H.append((Hm, hd * den))
    cols = {w: _int_columns(b, n) for w, b in pieces.items() if b}
    failures = []
    weights = list(cols)
    for a_i, wa in enumerate(weights):
        for wb in weights[a_i:]:
            target = tuple(Fraction(x) + Fraction(y) for x, y in zip(wa, wb))
            Pa, Pb = cols[wa], cols[wb]
            for c in range(Pa.shape[1]):
                X = sp.csr_matrix((n, n), dtype=np.int64)
                for k in np.nonzero(Pa[:, c])[0]:
                    X = X + ad[k] * int(Pa[k, c])
                Z = _exact_product(X, Pb)  # columns proportional to [x, y]
                for t, (Hm, scale) in enumerate(H):
                    lhs = _exact_product(Hm, Z)
                    w = target[t] * scale
                    if w.denominator != 1:
                        lhs = lhs * w.denominator
                    if np.any(lhs != Z * w.numerator):
                        failures.append((wa, wb, c))
                        break
                if len(failures) > 10:
                    break
    return GradingReport(dims, dict(expected) if expected is not None else None, dims_ok, not failures, failures)


def joint_pieces(table: StructureTable, hs: Sequence[Mapping[int, object]], candidates: Sequence[Iterable]) -> tuple[dict, int]:
    """Joint eigenspaces of commuting ad(h_1), ad(h_2), ...

    Returns ``({weights: basis}, residual)``; the residual is the part of the
    algebra not captured by the candidate weights.
    """
    pieces: dict[tuple, list] = {(): [{k: Fraction(1)} for k in range(table.dim)]}
    for h, cands in zip(hs, candidates):
        nxt = {}
        for w, basis in pieces.items():
            if not basis:
                continue
            rep = restricted_eigenspaces(table, h, basis, cands)
            for p in rep.pieces:
                if p.dim:
                    nxt[w + (p.value,)] = p.basis
        pieces = nxt
    residual = table.dim - sum(len(b) for b in pieces.values())
    return pieces, residual
