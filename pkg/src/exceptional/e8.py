"""The 248-dimensional algebra su(3, A1 (x) A2) over the rationals.

Canonical basis::

    X[0..63] Y[0..63] Z[0..63]   off-diagonal, tensor layout 8*first + second
    D, S, G, A                   seven units of the second factor, then of the first

``X_p``, ``Y_p``, ``Z_p`` carry ``p`` at matrix positions (1,2), (2,3), (3,1)
and ``-conj(p)`` at the transposed position.  A diagonal element is stored
as an operator triple: an 8x8 matrix per factor and per off-diagonal slot,
sending the slot-``s`` entry ``x`` (an 8x8 coefficient array) to
``t[0, s] @ x + x @ t[1, s].T``.  Brackets landing on the diagonal are kept
in this form and decomposed over the 56 basis triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .composition import AlgebraSpec, algebra
from .linalg import RatMatrix, SparseRowReducer, inverse

SLOTS = ("X", "Y", "Z")
DIAG_KINDS = ("D", "S", "G", "A")
N_OFF = 192
DIM = 248

# diagonal entries (a1, a2, a3) of the genuine diagonal matrices
GENUINE = {"D": (1, -1, 0), "S": (1, 1, -2), "E": (0, 1, -1), "F": (-1, 0, 1)}

PAIRS = {"O:O": (False, False), "O':O": (True, False), "O':O'": (True, True)}


class ClosureError(RuntimeError):
    """A diagonal bracket fell outside the span of the basis triples."""


class ConventionError(RuntimeError):
    """An identity that fixes the nested basis failed."""


def _unit_ops(spec: AlgebraSpec) -> tuple[np.ndarray, np.ndarray]:
    L = np.zeros((8, 8, 8), dtype=np.int64)
    R = np.zeros((8, 8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            s, c = spec.table[a][b]
            L[a, c, b] += s
            R[b, c, a] += s
    return L, R


def _fractions(a) -> np.ndarray:
    a = np.asarray(a)
    out = np.empty(a.shape, dtype=object)
    out.reshape(-1)[:] = [Fraction(int(v)) if not isinstance(v, Fraction) else v for v in a.reshape(-1)]
    return out


def _commutator(t, u):
    return np.matmul(t, u) - np.matmul(u, t)


# ---------------------------------------------------------------------------
# formal expansions of diagonal elements


@dataclass(frozen=True)
class Genuine:
    """diag(c1 q, c2 q, c3 q) for a unit q of one factor."""

    kind: str
    factor: int
    q: int


ExpItem = Union[Genuine, tuple]


class Expansion:
    """Linear combination of genuine diagonal matrices and of commutators of expansions."""

    def __init__(self, terms: Iterable[tuple[Fraction, ExpItem]] = ()):
        self.terms = [(Fraction(c), item) for c, item in terms if c]
        self._cache = None

    @classmethod
    def genuine(cls, kind: str, factor: int, q: int) -> "Expansion":
        return cls([(Fraction(1), Genuine(kind, factor, q))])

    @classmethod
    def comm(cls, a: "Expansion", b: "Expansion") -> "Expansion":
        return cls([(Fraction(1), (a, b))])

    def __add__(self, other: "Expansion") -> "Expansion":
        return Expansion(self.terms + other.terms)

    def __sub__(self, other: "Expansion") -> "Expansion":
        return self + other * -1

    def __mul__(self, c) -> "Expansion":
        return Expansion((c * a, item) for a, item in self.terms)

    __rmul__ = __mul__

    def depth(self) -> int:
        d = 0
        for _, item in self.terms:
            if not isinstance(item, Genuine):
                d = max(d, 1 + max(item[0].depth(), item[1].depth()))
        return d

    def scaled_triple(self, factors: Sequence["Factor"]) -> tuple[np.ndarray, int]:
        """Integer numerators and a denominator of the operator triple."""
        key = tuple(id(f) for f in factors)
        if self._cache is not None and self._cache[0] == key:
            return self._cache[1]
        parts = []
        for c, item in self.terms:
            if isinstance(item, Genuine):
                n, d = factors[item.factor].genuine_int(item.q, GENUINE[item.kind]), 1
            else:
                (na, da), (nb, db) = item[0].scaled_triple(factors), item[1].scaled_triple(factors)
                n, d = _int_array(_commutator(na.astype(object), nb.astype(object))), da * db
            parts.append((c.numerator, c.denominator * d, n))
        den = 1
        for _, d, _ in parts:
            den = lcm(den, d)
        total = np.zeros((2, 3, 8, 8), dtype=object)
        for a, d, n in parts:
            total = total + n.astype(object) * (a * (den // d))
        out = (_int_array(total), den)
        self._cache = (key, out)
        return out

    def triple(self, factors: Sequence["Factor"]) -> np.ndarray:
        n, d = self.scaled_triple(factors)
        return _fractions(n.astype(object)) / d

    def act(self, alg: "E8Algebra", vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Action on an off-diagonal vector through entry products and the Jacobi identity."""
        out: dict[int, Fraction] = {}
        for c, item in self.terms:
            if isinstance(item, Genuine):
                r = alg.genuine_action(item, vec)
            else:
                a, b = item
                r = _sub(a.act(alg, b.act(alg, vec)), b.act(alg, a.act(alg, vec)))
            _axpy(out, c, r)
        return out


def _axpy(out: dict, c, v: Mapping) -> dict:
    for k, x in v.items():
        s = out.get(k, 0) + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _sub(u: Mapping, v: Mapping) -> dict:
    return _axpy(dict(u), -1, v)


# ---------------------------------------------------------------------------
# one tensor factor


class Factor:
    """A tensor factor with its unit multiplication operators."""

    def __init__(self, spec: AlgebraSpec, index: int):
        self.spec = spec
        self.index = index
        self.L, self.R = _unit_ops(spec)

    @property
    def names(self) -> tuple[str, ...]:
        return self.spec.names

    def unit_product(self, a: int, b: int) -> tuple[int, int]:
        return self.spec.table[a][b]

    def genuine_int(self, q: int, coeffs: Sequence[int]) -> np.ndarray:
        """Slot s of diag(c q) acts by c_s L_q - c_{s+1} R_q."""
        t = np.zeros((2, 3, 8, 8), dtype=np.int64)
        for s in range(3):
            t[self.index, s] = coeffs[s] * self.L[q] - coeffs[(s + 1) % 3] * self.R[q]
        return t

    def genuine(self, q: int, coeffs: Sequence[int]) -> np.ndarray:
        return _fractions(self.genuine_int(q, coeffs))

    def phi(self, p: int, q: int) -> Expansion:
        """(p o q) I = 1/4 sum over T in D, E, F of [T_p, T_q]."""
        f = self.index
        total = Expansion()
        for kind in "DEF":
            total = total + Expansion.comm(Expansion.genuine(kind, f, p), Expansion.genuine(kind, f, q))
        return total * Fraction(1, 4)


# unit on which the compact A_r and G_r agree (the pattern of the split factor)
_AGREE = {1: 2, 2: 1, 3: 1, 4: 1, 5: 3, 6: 2}


def nested_basis(fac: Factor) -> tuple[dict[int, Expansion], dict[int, Expansion]]:
    """Expansions of G_r and A_r for the seven units r of one factor.

    G_Q = -2 (QL o L) I for Q != L and G_L = -2 (KL o K) I.  On the split
    factor A_{J+-} = 1/6 [G_{K+-}, G_{I-+}] with cyclic analogues, and
    A_L = -2/3 ((I o IL) - (J o JL)) I.  Without null labels the compact
    A_r (r != l) is the l-fixing direction of span{(p o q) I : pq = r},
    scaled to agree with G_r on one unit the way the split A_r do.
    """
    I, J, K, KL, JL, IL, L = range(1, 8)
    G: dict[int, Expansion] = {}
    for q in range(1, 7):
        s, ql = fac.unit_product(q, L)
        G[q] = fac.phi(ql, L) * (-2 * s)
    G[L] = fac.phi(KL, K) * -2
    A: dict[int, Expansion] = {L: (fac.phi(I, IL) - fac.phi(J, JL)) * Fraction(-2, 3)}
    if fac.spec.split:
        half = Fraction(1, 2)
        for r, rl, (a, al), (b, bl) in ((J, JL, (K, KL), (I, IL)), (K, KL, (I, IL), (J, JL)), (I, IL, (J, JL), (K, KL))):
            ap = Expansion.comm((G[a] + G[al]) * half, (G[b] - G[bl]) * half) * Fraction(1, 6)
            am = Expansion.comm((G[a] - G[al]) * half, (G[b] + G[bl]) * half) * Fraction(1, 6)
            A[r] = ap + am
            A[rl] = ap - am
    else:
        for r in range(1, 7):
            A[r] = _fixing_direction(fac, r, G[r])
    return G, A


def _fixing_direction(fac: Factor, r: int, g: Expansion) -> Expansion:
    f = fac.index
    facs = [fac, fac]
    pairs = [(a, b) for a in range(1, 7) for b in range(a + 1, 7) if fac.unit_product(a, b)[1] == r]
    (a1, b1), (a2, b2) = pairs
    pa, pb = fac.phi(a1, b1), fac.phi(a2, b2)
    da, db = pa.triple(facs)[f, 0], pb.triple(facs)[f, 0]
    k = next(i for i in range(8) if da[i, 7] or db[i, 7])
    t = pa * db[k, 7] - pb * da[k, 7]
    dt = t.triple(facs)[f, 0]
    if any(dt[:, 7]):
        raise ConventionError("no l-fixing direction in the span")
    dg = g.triple(facs)[f, 0]
    u = _AGREE[r]
    w = next(i for i in range(8) if dg[i, u])
    return t * (dg[w, u] / dt[w, u])


# ---------------------------------------------------------------------------
# exact decomposition over the diagonal basis

_LIMIT = 1 << 62


def _int_array(a: np.ndarray) -> np.ndarray:
    if a.dtype != object:
        return a.astype(np.int64)
    if a.size and max(abs(int(v)) for v in a.reshape(-1)) >= _LIMIT:
        return a
    return a.astype(np.int64)


def _matvec(A: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Exact integer product, with Python integers when int64 could overflow."""
    if A.dtype != object and x.dtype != object:
        if int(np.abs(A).max(initial=0)) * int(np.abs(x).sum()) < _LIMIT:
            return A @ x
    return A.astype(object) @ x.astype(object)


class DiagonalBasis:
    """The 56 basis triples and an exact decomposer over them.

    Triples are flattened to 384 integer coordinates over a common
    denominator.  56 pivot coordinates on which the basis is invertible are
    fixed once; a triple is solved there and then checked on every coordinate.
    """

    def __init__(self, triples: Sequence[tuple[np.ndarray, int]]):
        den = 1
        for _, d in triples:
            den = lcm(den, d)
        num = np.array([(n.astype(object) * (den // d)).reshape(-1) for n, d in triples], dtype=object)
        self.num = _int_array(num)
        self.den = den
        n = len(triples)
        B = self.num.T
        red = SparseRowReducer(n)
        pivots = []
        for r in range(B.shape[0]):
            row = {int(k): int(B[r, k]) for k in np.nonzero(B[r])[0]}
            if row and red.add(row):
                pivots.append(r)
                if red.rank == n:
                    break
        if red.rank != n:
            raise ClosureError("diagonal basis triples are linearly dependent")
        self.rank = red.rank
        self.pivots = np.array(pivots)
        inv = inverse(RatMatrix.from_rows(B[pivots].tolist()))
        dm = 1
        for row in inv.rows:
            for v in row.values():
                dm = lcm(dm, v.denominator)
        self.inv_num = _int_array(np.array([[int(inv[r, c] * dm) for c in range(n)] for r in range(n)], dtype=object))
        self.inv_den = dm
        self.B = B

    def decompose(self, v_num: np.ndarray, v_den: int = 1) -> dict[int, Fraction]:
        """Coordinates of the triple ``v_num / v_den``; ClosureError when outside the span."""
        v_num = _int_array(np.asarray(v_num).reshape(-1))
        if not v_num.any():
            return {}
        w = _matvec(self.inv_num, v_num[self.pivots])
        if np.any(_matvec(self.B, w) != v_num * self.inv_den):
            raise ClosureError("diagonal result is not in the span of the 56 basis triples")
        scale = Fraction(self.den, self.inv_den * v_den)
        return {int(k): scale * int(w[k]) for k in np.nonzero(w)[0]}

    def decompose_fractions(self, triple: np.ndarray) -> dict[int, Fraction]:
        den = 1
        flat = triple.reshape(-1)
        for v in flat:
            den = lcm(den, Fraction(v).denominator)
        num = np.array([int(Fraction(v) * den) for v in flat], dtype=object)
        return self.decompose(num, den)


_EYE8 = np.eye(8, dtype=np.int64)


def _factor_form(T: np.ndarray) -> np.ndarray | None:
    """Integer t1, t2 with 64 T = t1 (x) 1 + 1 (x) t2, or None."""
    T4 = T.reshape(8, 8, 8, 8)
    t1 = 8 * np.einsum("aibi->ab", T4)
    t2 = 8 * np.einsum("iaib->ab", T4) - int(np.trace(T)) * _EYE8
    if np.any(np.kron(t1, _EYE8) + np.kron(_EYE8, t2) != 64 * T):
        return None
    return np.stack([t1, t2])


# ---------------------------------------------------------------------------
# the algebra


class E8Algebra:
    """Basis, bracket rules and structure constants of su(3, A1 (x) A2)."""

    def __init__(self, first_split: bool = True, second_split: bool = False):
        self.factors = (Factor(algebra(first_split, True), 0), Factor(algebra(second_split, False), 1))
        self.pair = f"{self.factors[0].spec.label}:{self.factors[1].spec.label}"
        self.names = self._make_names()
        self._index = {n: i for i, n in enumerate(self.names)}
        self.expansions = self._build_expansions()
        self.diag = DiagonalBasis([e.scaled_triple(self.factors) for e in self.expansions])
        self.diag_triples = [e.triple(self.factors) for e in self.expansions]
        self.tri_num = self.diag.num.reshape(56, 2, 3, 8, 8)
        self.tri_den = self.diag.den
        self._table = None

    @classmethod
    def from_label(cls, pair: str) -> "E8Algebra":
        if pair not in PAIRS:
            raise ValueError(f"unknown algebra pair {pair!r}; expected one of {sorted(PAIRS)}")
        return cls(*PAIRS[pair])

    # -- naming

    def _make_names(self) -> list[str]:
        f1, f2 = self.factors
        names = [f"{s}[{f1.names[idx // 8]}*{f2.names[idx % 8]}]" for s in SLOTS for idx in range(64)]
        for kind in DIAG_KINDS:
            for f in (f2, f1):
                names.extend(f"{kind}[{f.names[q]}]" for q in range(1, 8))
        return names

    def index(self, name: str) -> int:
        return self._index[name]

    def diag_index(self, kind: str, factor: int, q: int) -> int:
        """Canonical index of D/S/G/A over unit ``q`` (1..7) of factor 0 or 1."""
        return N_OFF + 14 * DIAG_KINDS.index(kind) + (0 if factor == 1 else 7) + (q - 1)

    @staticmethod
    def off_index(slot: int, first: int, second: int) -> int:
        return 64 * slot + 8 * first + second

    def is_nested(self, i: int) -> bool:
        return i >= N_OFF + 28

    # -- diagonal basis

    def _build_expansions(self) -> list[Expansion]:
        out: list = [None] * 56
        for f, fac in enumerate(self.factors):
            G, A = nested_basis(fac)
            for q in range(1, 8):
                out[self.diag_index("D", f, q) - N_OFF] = Expansion.genuine("D", f, q)
                out[self.diag_index("S", f, q) - N_OFF] = Expansion.genuine("S", f, q)
                out[self.diag_index("G", f, q) - N_OFF] = G[q]
                out[self.diag_index("A", f, q) - N_OFF] = A[q]
        return out

    # -- bracket rules on basis elements

    def tensor_product(self, a: int, b: int) -> tuple[int, int]:
        """Sign and index of the product of tensor basis elements a, b (0..63)."""
        s1, c1 = self.factors[0].unit_product(a // 8, b // 8)
        s2, c2 = self.factors[1].unit_product(a % 8, b % 8)
        return s1 * s2, 8 * c1 + c2

    @staticmethod
    def conj_sign(idx: int) -> int:
        return (1 if idx // 8 == 0 else -1) * (1 if idx % 8 == 0 else -1)

    def _cross(self, i: int, j: int) -> dict[int, Fraction]:
        """Matrix commutator of off-diagonal elements of different slots."""
        si, x = divmod(i, 64)
        sj, y = divmod(j, 64)
        if sj == (si + 1) % 3:
            # [F_s x, F_{s+1} y] = F_{s+2}(-conj(xy))
            sign, idx = self.tensor_product(x, y)
            return {64 * ((si + 2) % 3) + idx: Fraction(-sign * self.conj_sign(idx))}
        # [F_s x, F_{s+2} y] = F_{s+1}(conj(yx))
        sign, idx = self.tensor_product(y, x)
        return {64 * ((si + 1) % 3) + idx: Fraction(sign * self.conj_sign(idx))}

    def _op(self, side: str, idx: int) -> np.ndarray:
        f1, f2 = self.factors
        if side == "L":
            return np.kron(f1.L[idx // 8], f2.L[idx % 8])
        return np.kron(f1.R[idx // 8], f2.R[idx % 8])

    def same_slot_triple(self, i: int, j: int) -> np.ndarray:
        """64 times the operator triple of [F_s x, F_s y].

        The three operators follow from the Jacobi identity and the cross
        brackets::

            slot s+1:  L_{ybar} L_x - L_{xbar} L_y
            slot s+2:  R_{ybar} R_x - R_{xbar} R_y
            slot s:    L_y L_{xbar} - L_x L_{ybar} - R_{ybar x - xbar y}
        """
        s, x = divmod(i, 64)
        s2, y = divmod(j, 64)
        if s != s2 or s >= 3:
            raise ValueError("expected off-diagonal elements of one slot")
        cx, cy = self.conj_sign(x), self.conj_sign(y)
        Lx, Ly, Rx, Ry = self._op("L", x), self._op("L", y), self._op("R", x), self._op("R", y)
        T_next = cy * Ly @ Lx - cx * Lx @ Ly
        T_prev = cy * Ry @ Rx - cx * Rx @ Ry
        e1, k1 = self.tensor_product(y, x)
        e2, k2 = self.tensor_product(x, y)
        R_w = cy * e1 * self._op("R", k1) - cx * e2 * self._op("R", k2)
        T_same = cx * Ly @ Lx - cy * Lx @ Ly - R_w
        out = np.zeros((2, 3, 8, 8), dtype=np.int64)
        for slot, T in ((s, T_same), ((s + 1) % 3, T_next), ((s + 2) % 3, T_prev)):
            parts = _factor_form(T)
            if parts is None:
                raise ClosureError(f"[{self.names[i]}, {self.names[j]}] is not a sum of factor operators")
            out[:, slot] = parts
        return out

    def _act(self, k: int, j: int) -> dict[int, Fraction]:
        """[diagonal basis element k, off-diagonal basis element j] from the stored triple."""
        s, idx = divmod(j, 64)
        b1, b2 = divmod(idx, 8)
        t = self.tri_num[k]
        y = np.zeros((8, 8), dtype=np.int64)
        y[:, b2] += t[0, s][:, b1]
        y[b1, :] += t[1, s][:, b2]
        den = self.tri_den
        return {64 * s + 8 * int(r) + int(c): Fraction(int(y[r, c]), den) for r, c in zip(*np.nonzero(y))}

    def genuine_action(self, g: Genuine, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """[diag(c q), v] for off-diagonal v, by entry products in A1 (x) A2."""
        coeffs = GENUINE[g.kind]
        qi = 8 * g.q if g.factor == 0 else g.q
        out: dict[int, Fraction] = {}
        for j, v in vec.items():
            s, x = divmod(j, 64)
            left, right = coeffs[s], coeffs[(s + 1) % 3]
            if left:
                sign, idx = self.tensor_product(qi, x)
                _axpy(out, left * sign * v, {64 * s + idx: 1})
            if right:
                sign, idx = self.tensor_product(x, qi)
                _axpy(out, -right * sign * v, {64 * s + idx: 1})
        return out

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """Bracket of two canonical basis elements, computed from the rules."""
        if i == j:
            return {}
        if i < N_OFF and j < N_OFF:
            if i // 64 != j // 64:
                return self._cross(i, j)
            t = self.same_slot_triple(i, j)
            return {N_OFF + k: c for k, c in self.diag.decompose(t, 64).items()}
        if i >= N_OFF and j >= N_OFF:
            a, b = self.tri_num[i - N_OFF], self.tri_num[j - N_OFF]
            t = _commutator(a, b)
            return {N_OFF + k: c for k, c in self.diag.decompose(t, self.tri_den ** 2).items()}
        if i >= N_OFF:
            return self._act(i - N_OFF, j)
        return {k: -c for k, c in self._act(j - N_OFF, i).items()}

    def triple_of(self, vec: Mapping[int, object]) -> np.ndarray:
        """Operator triple (Fractions) of a purely diagonal vector."""
        total = _fractions(np.zeros((2, 3, 8, 8), dtype=np.int64))
        for k, c in vec.items():
            if k < N_OFF:
                raise ValueError(f"{self.names[k]} is not diagonal")
            total = total + self.diag_triples[k - N_OFF] * Fraction(c)
        return total

    def jacobi_route(self, i: int, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """[diagonal basis element i, off-diagonal vec] through the stored expansion of i.

        Independent of the operator triples: nested elements unfold into
        commutators of genuine matrices, each acting by entry products.
        """
        if i < N_OFF:
            raise ValueError("expected a diagonal basis element")
        if any(k >= N_OFF for k in vec):
            raise ValueError("the expansion route acts on off-diagonal vectors only")
        return self.expansions[i - N_OFF].act(self, vec)

    # -- structure table

    def structure_table(self, progress=None):
        """All brackets of basis pairs, computed once and cached."""
        from .lie import StructureTable

        if self._table is None:
            entries = {}
            for i in range(DIM):
                for j in range(i + 1, DIM):
                    r = self.basis_bracket(i, j)
                    if r:
                        entries[(i, j)] = r
                if progress is not None:
                    progress(i)
            self._table = StructureTable(self.pair, list(self.names), entries)
        return self._table

    def attach_table(self, table) -> None:
        if list(table.names) != self.names or table.pair != self.pair:
            raise ValueError("structure table does not belong to this algebra")
        self._table = table

    def vector(self, coeffs: Mapping[int, object] | None = None) -> "E8Vector":
        return E8Vector(self, coeffs or {})

    def basis_vector(self, key) -> "E8Vector":
        i = key if isinstance(key, (int, np.integer)) else self.index(key)
        return E8Vector(self, {int(i): 1})

    def element(self, kind: str, *labels) -> "E8Vector":
        """Element by kind and unit names, e.g. ``element("X", "K", "i")`` or ``element("G", "L")``."""
        if kind in SLOTS:
            return self.basis_vector(f"{kind}[{labels[0]}*{labels[1]}]")
        return self.basis_vector(f"{kind}[{labels[0]}]")


class E8Vector:
    """Sparse exact element of the algebra over the canonical basis."""

    __slots__ = ("alg", "c")

    def __init__(self, alg: E8Algebra, coeffs: Mapping[int, object]):
        self.alg = alg
        self.c = {int(k): Fraction(v) for k, v in coeffs.items() if v}

    def _wrap(self, c: dict) -> "E8Vector":
        return E8Vector(self.alg, c)

    def __add__(self, other: "E8Vector") -> "E8Vector":
        return self._wrap(_axpy(dict(self.c), 1, other.c))

    def __sub__(self, other: "E8Vector") -> "E8Vector":
        return self._wrap(_axpy(dict(self.c), -1, other.c))

    def __neg__(self) -> "E8Vector":
        return self._wrap({k: -v for k, v in self.c.items()})

    def __mul__(self, s) -> "E8Vector":
        s = Fraction(s)
        return self._wrap({k: s * v for k, v in self.c.items()})

    __rmul__ = __mul__

    def __truediv__(self, s) -> "E8Vector":
        return self * (1 / Fraction(s))

    def __eq__(self, other) -> bool:
        return isinstance(other, E8Vector) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self) -> bool:
        return bool(self.c)

    def is_zero(self) -> bool:
        return not self.c

    def coords(self) -> list[Fraction]:
        out = [Fraction(0)] * DIM
        for k, v in self.c.items():
            out[k] = v
        return out

    def bracket(self, other: "E8Vector") -> "E8Vector":
        return self._wrap(self.alg.structure_table().bracket(self.c, other.c))

    def __repr__(self) -> str:
        return f"E8Vector({self})"

    def __str__(self) -> str:
        from .expr import format_vector

        return format_vector(self)


def bracket(u: E8Vector, v: E8Vector) -> E8Vector:
    return u.bracket(v)


def zero(alg: E8Algebra) -> E8Vector:
    return E8Vector(alg, {})
