"""Freudenthal's e7 and its two towers inside the (O', O) algebra.

Labeled Albert elements ``Q X`` (Q imaginary split, X in H3(O)) sit in
the off-diagonal slots with tensor label ``Q (x) x``; the tracefree diagonal
goes to D_Q, S_Q and the trace to ``-1/2 G_Q`` per unit of ``tr X / 3``.
e6 enters through 78 generators: unlabeled rotations, L-labeled boosts and
commutators of rotations for the derivations.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping, Sequence

from .albert import (
    AlbertElem,
    E6Operator,
    OctMatrix,
    albert_basis,
    boost_offdiag,
    cross_operator,
    cross_operator_alt,
    det,
    diagonal_generator,
    freudenthal,
    jordan,
    random_albert,
    rotation_offdiag,
    trace,
    trace_form,
)
from .composition import OCTONIONS, AlgElem, null_sets
from .e8 import N_OFF, ConventionError, E8Algebra, E8Vector
from .freudenthal import FTower, Theta, act
from .freudenthal import bracket as theta_bracket
from .linalg import SpanCoordinates
from .report import Report

HALF = Fraction(1, 2)
I, J, K, KL, JL, IL, L = range(1, 8)
# Albert off-diagonal a, b, c live at (2,3), (3,1), (1,2): slots Y, Z, X
_ALBERT_SLOT = {0: 1, 1: 2, 2: 0}


def _op_row(op: E6Operator) -> dict[int, Fraction]:
    return {27 * r + c: v for r, rd in enumerate(op.matrix.rows) for c, v in rd.items()}


class Embedding:
    """Maps Theta and towers into the structure table of an (O', O) algebra."""

    def __init__(self, alg: E8Algebra | None = None, l_pair: str = "K"):
        alg = alg or E8Algebra.from_label("O':O")
        if alg.pair != "O':O":
            raise ValueError("Freudenthal towers need the (O', O) pair")
        self.alg = alg
        self.table = alg.structure_table()
        self.split = alg.factors[0].spec
        self.plus, self.minus = null_sets(self.split)
        self.Lunit = self.split.basis(L)
        self.set_l_pair(l_pair)
        self._check_cartan()
        self._build_e6()
        self.duality = self._derive_duality()

    def _check_cartan(self) -> None:
        """A_L and G_L must act on the null labels with the expected eigenvalues."""
        X = AlbertElem.from_coords([0] * 5 + [1] + [0] * 21)
        want = {("I", 1): (-2, -2), ("J", 1): (2, -2), ("K", 1): (0, 4),
                ("I", -1): (2, 2), ("J", -1): (-2, 2), ("K", -1): (0, -4)}
        for (q, sg), (a, g) in want.items():
            Q = self.split.unit(q) + self.split.unit(q + "L") * sg
            v = self.embed_labeled(Q, X)
            if self.br(self.A(L), v) != v * a or self.br(self.G(L), v) != v * g:
                raise ConventionError(f"Cartan eigenvalues on {q}{'+' if sg > 0 else '-'}{q}L disagree")
        for q, sg in (("I+", -6), ("I-", 6), ("J+", 6), ("J-", -6)):
            AQ = self.A_of(self.label(q))
            if self.br(self.G(L), AQ) != AQ * sg:
                raise ConventionError(f"[G_L, A_{q}] is not {sg} A_{q}")

    def identity_of(self, a: int, b: int) -> E8Vector:
        """The nested element (a o b) I over the split factor."""
        alg = self.alg
        e = alg.factors[0].phi(a, b)
        d = alg.diag.decompose_fractions(e.triple(alg.factors))
        return self.v({N_OFF + k: c for k, c in d.items()})

    def set_l_pair(self, q: str) -> None:
        """Read "L I" as (QL o Q) I for the label pair Q, QL (Q in I, J, K)."""
        a = self.split.index(q)
        self.l_pair = q
        self.l_identity = self.identity_of(self.split.index(q + "L"), a)

    # -- small constructors

    def v(self, coeffs: Mapping[int, object] | None = None) -> E8Vector:
        return E8Vector(self.alg, coeffs or {})

    def named(self, name: str) -> E8Vector:
        return self.alg.basis_vector(name)

    def G(self, q: int) -> E8Vector:
        return self.v({self.alg.diag_index("G", 0, q): 1})

    def A(self, q: int) -> E8Vector:
        return self.v({self.alg.diag_index("A", 0, q): 1})

    def G_of(self, Q: AlgElem) -> E8Vector:
        return self.v({self.alg.diag_index("G", 0, q): c for q, c in enumerate(Q.coeffs) if q and c})

    def A_of(self, Q: AlgElem) -> E8Vector:
        return self.v({self.alg.diag_index("A", 0, q): c for q, c in enumerate(Q.coeffs) if q and c})

    def label(self, name: str) -> AlgElem:
        """``I+``, ``K-`` and friends, or a plain unit name."""
        if name[-1] in "+-" and len(name) == 2:
            return (self.plus if name[-1] == "+" else self.minus)[name[0]]
        return self.split.unit(name)

    def br(self, u: E8Vector, w: E8Vector) -> E8Vector:
        return E8Vector(self.alg, self.table.bracket(u.c, w.c))

    # -- labeled Albert algebra

    def embed_labeled(self, Q: AlgElem, X: AlbertElem) -> E8Vector:
        if Q.spec is not self.split and Q.spec.names != self.split.names:
            raise ValueError("labels are split octonions")
        if Q.coeffs[0] != 0:
            raise ValueError("label must be purely imaginary")
        out: dict[int, Fraction] = {}
        alg = self.alg
        for part, x in enumerate((X.a, X.b, X.c)):
            slot = _ALBERT_SLOT[part]
            for a, qa in enumerate(Q.coeffs):
                if not qa:
                    continue
                for b, xb in enumerate(x.coeffs):
                    if xb:
                        k = alg.off_index(slot, a, b)
                        out[k] = out.get(k, 0) + qa * xb
        z1, z2, z3 = X.z
        d, s, t = (z1 - z2) / 2, (z1 + z2 - 2 * z3) / 6, (z1 + z2 + z3) / 6
        for q in range(1, 8):
            qa = Q.coeffs[q]
            if not qa:
                continue
            for kind, c in (("D", d), ("S", s)):
                if c:
                    k = alg.diag_index(kind, 0, q)
                    out[k] = out.get(k, 0) + qa * c
            if t and q == L:
                for k, c in self.l_identity.c.items():
                    out[k] = out.get(k, 0) + qa * 2 * t * c
            elif t:
                k = alg.diag_index("G", 0, q)
                out[k] = out.get(k, 0) - qa * t
        return self.v(out)

    def lab(self, name: str, X: AlbertElem) -> E8Vector:
        return self.embed_labeled(self.label(name), X)

    # -- e6

    def embed_generator(self, phi: OctMatrix) -> E8Vector:
        """Rotations unlabeled, boosts with label L."""
        alg = self.alg
        out: dict[int, Fraction] = {}

        def put(k, c):
            if c:
                out[k] = out.get(k, 0) + c

        e = phi.e
        for part, (r, c) in enumerate(((1, 2), (2, 0), (0, 1))):
            slot = _ALBERT_SLOT[part]
            x, y = e[r][c].coeffs, e[c][r].conj().coeffs
            for b in range(8):
                put(alg.off_index(slot, 0, b), (x[b] - y[b]) / 2)
                put(alg.off_index(slot, L, b), (x[b] + y[b]) / 2)
        d = [e[i][i].coeffs for i in range(3)]
        if d[0][0] + d[1][0] + d[2][0] != 0:
            raise ValueError("e6 generators must be tracefree")
        for b in range(8):
            q1, q2, q3 = d[0][b], d[1][b], d[2][b]
            if b and q1 + q2 + q3 != 0:
                raise ValueError("imaginary diagonal must be tracefree")
            factor, unit = (0, L) if b == 0 else (1, b)
            put(alg.diag_index("D", factor, unit), (q1 - q2) / 2)
            put(alg.diag_index("S", factor, unit), (q1 + q2 - 2 * q3) / 6)
        return self.v(out)

    def _build_e6(self) -> None:
        O = OCTONIONS
        rots, gens = [], []
        for part in range(3):
            for u in range(8):
                rots.append(rotation_offdiag(part, O.basis(u)))
                gens.append(boost_offdiag(part, O.basis(u)))
        for u in range(1, 8):
            q = O.basis(u)
            rots.append(diagonal_generator([q, -q, O.zero()]))
            rots.append(diagonal_generator([q, q, q * -2]))
        one = O.one()
        gens.append(diagonal_generator([one, -one, O.zero()]))
        gens.append(diagonal_generator([one, one, one * -2]))
        self.e6_coords = SpanCoordinates(729)
        self.e6_ops: list[E6Operator] = []
        self.e6_images: list[E8Vector] = []
        for phi in rots + gens:
            op = E6Operator.from_generator(phi)
            if self.e6_coords.add(_op_row(op)):
                self.e6_ops.append(op)
                self.e6_images.append(self.embed_generator(phi))
        nrot = 38
        for a in range(nrot):
            for b in range(a + 1, nrot):
                if self.e6_coords.rank == 78:
                    break
                op = self.e6_ops[a].commutator(self.e6_ops[b])
                if self.e6_coords.add(_op_row(op)):
                    self.e6_ops.append(op)
                    self.e6_images.append(self.br(self.e6_images[a], self.e6_images[b]))
        if self.e6_coords.rank != 78:
            raise ConventionError(f"e6 span has dimension {self.e6_coords.rank}, expected 78")

    def embed_phi(self, phi: E6Operator) -> E8Vector:
        coords = self.e6_coords.coordinates(_op_row(phi))
        if coords is None:
            raise ValueError("operator is not in e6")
        out = self.v()
        for g, c in coords.items():
            out = out + self.e6_images[g] * c
        return out

    def _derive_duality(self) -> dict[str, str]:
        """Which of phi, phi' each tower label sees, frozen from boost actions.

        A boost is tested on every Albert basis element; the label sees
        ``phi`` when [L phi, Q X] = Q phi(X) and ``dual`` when it gives
        Q phi'(X).  Rotations must give Q phi(X) on every label.
        """
        O = OCTONIONS
        boosts = [boost_offdiag(0, O.basis(3)), diagonal_generator([O.one(), -O.one(), O.zero()])]
        rot = rotation_offdiag(1, O.basis(5))
        found = {}
        for name in ("I-", "J+", "J-", "I+", "K-", "K+"):
            Q = self.label(name)
            seen = set()
            for phi in boosts:
                op = E6Operator.from_generator(phi)
                img = self.embed_generator(phi)
                for X in albert_basis():
                    got = self.br(img, self.embed_labeled(Q, X))
                    a, b = self.embed_labeled(Q, op(X)), self.embed_labeled(Q, op.dual(X))
                    if a == b:
                        if got != a:
                            seen.add("neither")
                    elif got == a:
                        seen.add("phi")
                    elif got == b:
                        seen.add("dual")
                    else:
                        seen.add("neither")
            op = E6Operator.from_generator(rot)
            img = self.embed_generator(rot)
            for X in albert_basis():
                if self.br(img, self.embed_labeled(Q, X)) != self.embed_labeled(Q, op(X)):
                    raise ConventionError(f"rotation does not act by phi on label {name}")
            if len(seen) != 1 or "neither" in seen:
                raise ConventionError(f"boosts act inconsistently on label {name}: {sorted(seen)}")
            found[name] = seen.pop()
        return found

    # -- Theta and towers

    def embed_theta(self, theta: Theta) -> E8Vector:
        """phi_0 + rho G_L / 6 + K- A - K+ B."""
        out = self.embed_phi(theta.phi) if not theta.phi.is_zero() else self.v()
        if theta.rho:
            out = out + self.G(L) * (Fraction(theta.rho) / 6)
        return out + self.lab("K-", theta.A) - self.lab("K+", theta.B)

    def embed_tower(self, P: FTower, sign: str = "+") -> E8Vector:
        if sign == "+":
            return (self.lab("I-", P.X) + self.lab("J+", P.Y)
                    - self.A_of(self.label("I+")) * (P.p / 2) - self.A_of(self.label("J+")) * (P.q / 2))
        if sign == "-":
            return (self.lab("J-", P.X) - self.lab("I+", P.Y)
                    - self.A_of(self.label("J-")) * (P.p / 2) + self.A_of(self.label("I-")) * (P.q / 2))
        raise ValueError("tower sign is '+' or '-'")

    def tower_duality(self, sign: str) -> tuple[str, str]:
        """(X-line, Y-line) choice of phi / dual for the given tower."""
        x, y = ("I-", "J+") if sign == "+" else ("J-", "I+")
        return self.duality[x], self.duality[y]

    def act_tower(self, theta: Theta, P: FTower, sign: str) -> FTower:
        fx, fy = self.tower_duality(sign)
        return act(theta, P, phi_x=fx, phi_y=fy)

    def tower_basis(self, sign: str) -> list[E8Vector]:
        key = "_tb" + sign
        if not hasattr(self, key):
            setattr(self, key, [self.embed_tower(FTower.from_coords([int(i == n) for i in range(56)]), sign)
                                for n in range(56)])
        return getattr(self, key)

    def extract_tower(self, v: E8Vector, sign: str) -> FTower | None:
        """Inverse of embed_tower on its image, None off the image."""
        key = "_tc" + sign
        if not hasattr(self, key):
            sc = SpanCoordinates(self.alg_dim)
            for b in self.tower_basis(sign):
                if not sc.add(b.c):
                    raise ConventionError("tower embedding is not injective")
            setattr(self, key, sc)
        coords = getattr(self, key).coordinates(v.c)
        if coords is None:
            return None
        return FTower.from_coords([coords.get(n, 0) for n in range(56)])

    def e7_basis(self) -> list[E8Vector]:
        """Images of the 78 e6 generators, the dilation and the 54 null translations."""
        out = list(self.e6_images)
        out.append(self.G(L))
        for X in albert_basis():
            out.append(self.lab("K-", X))
            out.append(self.lab("K+", X))
        return out

    @property
    def alg_dim(self) -> int:
        return len(self.alg.names)


def random_e6_generator(rng: random.Random, bound: int = 3) -> OctMatrix:
    """Random tracefree octonionic 3x3 matrix (rotation plus boost parts)."""
    O = OCTONIONS

    def oct_():
        return O.element([Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if rng.random() < 0.3 else 0
                          for _ in range(8)])

    e = [[O.zero() for _ in range(3)] for _ in range(3)]
    for r, c in ((0, 1), (1, 2), (2, 0)):
        e[r][c] = oct_()
        e[c][r] = oct_()
    d1, d2 = oct_(), oct_()
    e[0][0], e[1][1] = d1, d2
    e[2][2] = (d1 + d2) * -1
    return OctMatrix(e)


def random_theta(rng: random.Random, bound: int = 3, parts: str = "prAB", nested: bool = False) -> Theta:
    phi = E6Operator.zero()
    if "p" in parts:
        phi = E6Operator.from_generator(random_e6_generator(rng, bound))
        if nested:
            phi = phi + phi.commutator(E6Operator.from_generator(random_e6_generator(rng, bound)))
    rho = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if "r" in parts else Fraction(0)
    A = random_albert(rng, bound, 0.3) if "A" in parts else AlbertElem.zero()
    B = random_albert(rng, bound, 0.3) if "B" in parts else AlbertElem.zero()
    return Theta(phi, rho, A, B)


# ---------------------------------------------------------------------------
# verification suites

SIGNS = ("+", "-")
CYCLIC = (("K", "I", "J"), ("I", "J", "K"), ("J", "K", "I"))


def _opp(s: str) -> str:
    return "-" if s == "+" else "+"


def _tracefree_basis() -> list[AlbertElem]:
    out = [AlbertElem.diag(1, -1, 0), AlbertElem.diag(1, 1, -2)]
    return out + albert_basis()[3:]


def _diag_cases() -> list[AlbertElem]:
    r = range(-2, 3)
    return [AlbertElem.diag(a, b, c) for a in r for b in r for c in r]


def _mismatch(report: Report, id: str, count: int, total: int, first) -> None:
    report.add(id, count == 0, {"cases": total, "mismatches": count, "first": first})


def verify_lemma1(emb: Embedding, basis: Sequence[AlbertElem] | None = None) -> Report:
    """[Q1 X, Q2 Y] = 2 Q1Q2 X*Y over basis pairs and ordered null label pairs."""
    rep = Report("lemma1")
    basis = list(basis) if basis is not None else albert_basis()
    for s in SIGNS:
        labels = [k + s for k in "IJK"]
        emb_cache = {(q, n): emb.lab(q, X) for q in labels for n, X in enumerate(basis)}
        bad, total, first = 0, 0, None
        for q1 in labels:
            for q2 in labels:
                if q1 == q2:
                    continue
                Q12 = emb.label(q1) * emb.label(q2) * 2
                for a, X in enumerate(basis):
                    for b, Y in enumerate(basis):
                        total += 1
                        got = emb.br(emb_cache[(q1, a)], emb_cache[(q2, b)])
                        if got != emb.embed_labeled(Q12, freudenthal(X, Y)):
                            bad += 1
                            first = first or {"Q1": q1, "Q2": q2, "X": str(X), "Y": str(Y), "got": str(got)}
        _mismatch(rep, f"Lemma1-N{s}", bad, total, first)
        # degenerate extensions with equal labels
        tf = _tracefree_basis()
        bad, total, first = 0, 0, None
        for q in labels:
            G = emb.G_of(emb.label(q))
            imgs = [emb.lab(q, X) for X in tf]
            for a, u in enumerate(imgs):
                total += 1
                if not emb.br(u, G).is_zero():
                    bad += 1
                    first = first or {"Q": q, "X": str(tf[a]), "with": "G_Q"}
                for b in range(a, len(imgs)):
                    total += 1
                    if not emb.br(u, imgs[b]).is_zero():
                        bad += 1
                        first = first or {"Q": q, "X": str(tf[a]), "Y": str(tf[b])}
        _mismatch(rep, f"Lemma1-equal-labels-N{s}", bad, total, first)
    # the worked type I example
    EI = AlbertElem.from_coords([Fraction(1, 2), Fraction(-1, 2), 0] + [0] * 16 + [Fraction(1, 2)] + [0] * 7)
    ok = True
    for s in SIGNS:
        lhs = emb.br(emb.lab("K" + s, EI), emb.lab("I" + s, EI))
        rhs = emb.lab("J" + _opp(s), freudenthal(EI, EI) * 2)
        ok &= lhs == rhs and trace_form(EI, EI) == 1
    rep.add("Eq-E1comm", ok, {"E_I": str(EI)})
    return rep.finish()


def verify_lemma2(emb: Embedding, basis: Sequence[AlbertElem] | None = None) -> Report:
    """[K+- X, I-+ Y] = 1/2 tr(X o Y) A_{J+-} and cyclic permutations."""
    rep = Report("lemma2")
    basis = list(basis) if basis is not None else albert_basis()
    for a_, b_, c_ in CYCLIC:
        for s in SIGNS:
            t = _opp(s)
            ea = [emb.lab(a_ + s, X) for X in basis]
            eb = [emb.lab(b_ + t, X) for X in basis]
            A = emb.A_of(emb.label(c_ + s))
            bad, total, first, vanishing = 0, 0, None, 0
            for i, X in enumerate(basis):
                for j, Y in enumerate(basis):
                    total += 1
                    tr = trace_form(X, Y)
                    got = emb.br(ea[i], eb[j])
                    if got != A * (tr / 2):
                        bad += 1
                        first = first or {"X": str(X), "Y": str(Y), "got": str(got)}
                    elif tr == 0:
                        vanishing += 1
            rep.add(f"Lemma2-{a_}{s}{b_}{t}", bad == 0,
                    {"cases": total, "mismatches": bad, "vanishing": vanishing, "first": first})
    Id = AlbertElem.identity()
    for s in SIGNS:
        t = _opp(s)
        lhs = emb.br(emb.G_of(emb.label("K" + s)), emb.G_of(emb.label("I" + t)))
        rep.add(f"Eq-GG-A{s}", lhs == emb.A_of(emb.label("J" + s)) * 6)
        lhs = emb.br(emb.lab("K" + s, Id), emb.lab("I" + t, Id))
        rep.add(f"Lemma2-identity{s}", lhs == emb.A_of(emb.label("J" + s)) * Fraction(3, 2))
    return rep.finish()


def verify_determinant(emb: Embedding, n_random: int = 50, seed: int = 0) -> Report:
    rep = Report("det")
    rng = random.Random(seed)
    cases = [random_albert(rng, 5, 0.5) for _ in range(n_random)] + _diag_cases()
    bad = {"CDet": 0, "Eq-Kdet": 0, "Eq-triple": 0}
    first = {k: None for k in bad}
    for X in cases:
        d = det(X)
        for s in SIGNS:
            kx = emb.lab("K" + s, X)
            got = emb.br(kx, emb.br(kx, emb.lab("I" + s, X)))
            if got != emb.A_of(emb.label("I" + _opp(s))) * (-3 * d):
                bad["CDet"] += 1
                first["CDet"] = first["CDet"] or {"X": str(X), "sign": s}
        XX = freudenthal(X, X)
        km = emb.lab("K-", X)
        if emb.br(km, emb.lab("K+", XX)) != emb.G(L) * (d / 2):
            bad["Eq-Kdet"] += 1
            first["Eq-Kdet"] = first["Eq-Kdet"] or {"X": str(X)}
        if emb.br(km, emb.br(emb.lab("I-", X), emb.lab("J-", X))) != emb.G(L) * d:
            bad["Eq-triple"] += 1
            first["Eq-triple"] = first["Eq-triple"] or {"X": str(X)}
    for k in bad:
        _mismatch(rep, k, bad[k], len(cases), first[k])
    Id = AlbertElem.identity()
    ok = all(emb.br(emb.lab("K" + s, Id), emb.br(emb.lab("K" + s, Id), emb.lab("I" + s, Id)))
             == emb.A_of(emb.label("I" + _opp(s))) * -3 for s in SIGNS)
    rep.add("CDet-identity", ok)
    return rep.finish()


def _tower_lines(P: FTower) -> dict:
    return {"Eq-FreudX": P.X.coords(), "Eq-FreudY": P.Y.coords(), "Eq-pFreud": P.p, "Eq-qFreud": P.q}


def verify_action_equivalence(emb: Embedding, n: int = 200, seed: int = 0) -> Report:
    """[Theta_0, P_+-] against Freudenthal's action, line by line."""
    from .freudenthal import random_tower

    rep = Report("action")
    rng = random.Random(seed)
    kinds = ["p", "r", "A", "B", "prAB"]
    bad = {k: 0 for k in ("Eq-FreudX", "Eq-FreudY", "Eq-pFreud", "Eq-qFreud", "off-tower")}
    first = None
    for m in range(n):
        parts = kinds[m % len(kinds)]
        theta = random_theta(rng, parts=parts, nested=(m % 4 == 0))
        for s in SIGNS:
            P = random_tower(rng, 3, 0.3)
            got = emb.extract_tower(emb.br(emb.embed_theta(theta), emb.embed_tower(P, s)), s)
            want = emb.act_tower(theta, P, s)
            if got is None:
                bad["off-tower"] += 1
                first = first or {"case": m, "sign": s, "parts": parts, "line": "off-tower"}
                continue
            g, w = _tower_lines(got), _tower_lines(want)
            for k in g:
                if g[k] != w[k]:
                    bad[k] += 1
                    first = first or {"case": m, "sign": s, "parts": parts, "line": k}
    total = sum(bad.values())
    rep.add("Eq-FreudX-qFreud", total == 0, {"cases": 2 * n, "mismatches": bad, "first": first,
                                             "duality": dict(emb.duality)})
    _anchor_checks(emb, rep, rng)
    return rep.finish()


def _anchor_checks(emb: Embedding, rep: Report, rng: random.Random) -> None:
    from .freudenthal import random_tower

    Xs = [random_albert(rng, 4, 0.4) for _ in range(5)] + [AlbertElem.identity()]
    lab, AQ = emb.lab, lambda q: emb.A_of(emb.label(q))
    for s in SIGNS:
        t = _opp(s)
        ok = {"Eq-KpAJp": True, "Eq-KpAJm": True, "Eq-KpAIp": True, "Eq-KpAIm": True}
        for X in Xs:
            kx = lab("K" + s, X)
            ok["Eq-KpAJp"] &= emb.br(kx, AQ("J" + s)).is_zero()
            ok["Eq-KpAJm"] &= emb.br(kx, AQ("J" + t)) == lab("I" + s, X) * -2
            ok["Eq-KpAIp"] &= emb.br(kx, AQ("I" + s)) == lab("J" + s, X) * 2
            ok["Eq-KpAIm"] &= emb.br(kx, AQ("I" + t)).is_zero()
        for k, v in ok.items():
            rep.add(f"{k}{s}", v)
        sg = 1 if s == "+" else -1
        rep.add(f"Eq-GAI{s}", emb.br(emb.G(L), AQ("I" + s)) == AQ("I" + s) * (-6 * sg))
        rep.add(f"Eq-GAJ{s}", emb.br(emb.G(L), AQ("J" + s)) == AQ("J" + s) * (6 * sg))
    # dilation: -1/6 of the literal element -2 (K o KL) I, which is +1/6 G_L here
    literal_GL = emb.G(L) * -1
    dil = literal_GL * Fraction(-1, 6)
    X = random_albert(rng, 4, 0.4)
    ok = True
    for s in SIGNS:
        xl, yl = ("I-", "J+") if s == "+" else ("J-", "I+")
        ok &= emb.br(dil, lab(xl, X)) == lab(xl, X) * Fraction(1, 3)
        ok &= emb.br(dil, lab(yl, X)) == lab(yl, X) * Fraction(-1, 3)
    rep.add("dilation-scaling", ok, {"dilation": "-1/6 * (-2 (K o KL) I) = +1/6 G_L"})
    # doublet under A_L
    ok = True
    for _ in range(5):
        P = random_tower(rng, 3, 0.3)
        for s, sg in (("+", 2), ("-", -2)):
            ok &= emb.br(emb.A(L), emb.embed_tower(P, s)) == emb.embed_tower(P, s) * sg
    rep.add("doublet-AL", ok)


def verify_e7_bracket(emb: Embedding, n: int = 100, seed: int = 0) -> Report:
    rep = Report("e7bracket")
    rng = random.Random(seed)
    bad, first = 0, None
    for m in range(n):
        t1 = random_theta(rng, nested=(m % 5 == 0))
        t2 = random_theta(rng)
        got = emb.br(emb.embed_theta(t1), emb.embed_theta(t2))
        if got != emb.embed_theta(theta_bracket(t1, t2)):
            bad += 1
            first = first or {"case": m}
    _mismatch(rep, "Eq-FreudPhi-FreudB", bad, n, first)
    # null translation pair: phi part -2<A,B>, rho part -tr(A o B)
    ok_pair, ok_forms, ok_cube, ok_kmp = True, True, True, True
    for _ in range(5):
        A, B = random_albert(rng, 3, 0.3), random_albert(rng, 3, 0.3)
        th = theta_bracket(Theta(A=A), Theta(B=B))
        ok_pair &= th.phi == cross_operator(A, B).scale(-2) and th.rho == -trace_form(A, B)
        ok_pair &= emb.br(emb.lab("K-", A), emb.lab("K+", B) * -1) == emb.embed_theta(th)
        ok_forms &= cross_operator(A, B) == cross_operator_alt(A, B)
        ok_cube &= cross_operator(A, freudenthal(A, A)).is_zero()
        X = random_albert(rng, 3, 0.3)
        lhs = emb.br(emb.br(emb.lab("K-", A), emb.lab("K+", B)), emb.lab("I-", X))
        rhs = emb.lab("I-", cross_operator(A, B)(X) * 2) + emb.br(emb.G(L), emb.lab("I-", X)) * (trace_form(A, B) / 6)
        ok_kmp &= lhs == rhs
    rep.add("Eq-Kmp-pair", ok_pair)
    rep.add("Eq-e6AB-alternate", ok_forms)
    rep.add("Eq-AstarA", ok_cube)
    rep.add("Eq-Kmp", ok_kmp)
    # auxiliary identities: "L I" read as (QL o Q) I for the pair Q, QL in play
    Id = AlbertElem.identity()
    Xs = [random_albert(rng, 3, 0.4) for _ in range(3)] + [AlbertElem.diag(1, 2, 5)]
    ok1 = ok2 = ok2_third = ok3 = True
    try:
        for q in "KIJ":
            emb.set_l_pair(q)
            for X in Xs:
                LX = emb.embed_labeled(emb.Lunit, X)
                for s, sg in (("+", 1), ("-", -1)):
                    ok1 &= emb.br(emb.lab(q + s, X), emb.lab(q + _opp(s), Id)) == LX * sg
                    for r in "KIJ".replace(q, ""):
                        got = emb.br(LX, emb.lab(r + s, Id))
                        ok2 &= got == emb.lab(r + s, X * 2 - Id * trace(X)) * -sg
                        ok2_third &= got == emb.lab(r + s, X * 2 - Id * (trace(X) / 3)) * -sg
        emb.set_l_pair("K")
        for _ in range(3):
            A, B = random_albert(rng, 3, 0.3), random_albert(rng, 3, 0.3)
            LA, LB = emb.embed_labeled(emb.Lunit, A), emb.embed_labeled(emb.Lunit, B)
            ok3 &= (emb.br(emb.lab("K-", A), emb.lab("K+", B))
                    == emb.br(LA, LB) * Fraction(-1, 2) - emb.embed_labeled(emb.Lunit, jordan(A, B)))
    finally:
        emb.set_l_pair("K")
    rep.add("Eq-new1", ok1, {"L_identity": "(QL o Q) I, Q in K, I, J"})
    rep.add("Eq-new2", ok2, {"trace_term": "tr(X) I", "one_third_form_holds": ok2_third})
    rep.add("KmKp-expansion", ok3, {"L_identity": "(KL o K) I = -1/2 G_L"})
    return rep.finish()


def verify_decomposition(emb: Embedding) -> Report:
    """248 = 133 + 56 + 56 + 3 with e7-invariant towers."""
    from .lie import Subspace, centralizer, subalgebra_closure
    from .linalg import RatMatrix, signature

    rep = Report("decomp")
    table, n = emb.table, emb.alg_dim
    e7 = [v.c for v in emb.e7_basis()]
    cl = subalgebra_closure(table, e7)
    basis7 = Subspace(n, e7).basis()
    sig7 = signature(RatMatrix.from_rows([[table.killing(a, b) for b in basis7] for a in basis7]))
    rep.add("e7-closure", cl.closed and cl.dim == 133 and sig7 == (54, 79, 0),
            {"dim": cl.dim, "closed": cl.closed, "killing_signature": list(sig7)})
    gens = [emb.lab(q, X).c for q in ("K-", "K+") for X in albert_basis()]
    cen = centralizer(table, gens)
    cen_space = Subspace(n, cen)
    sl2 = [emb.A(K).c, emb.A(KL).c, emb.A(L).c]
    ok_c = len(cen) == 3 and all(cen_space.contains(v) for v in sl2)
    # the null translations generate e7, so this is the centralizer of e7
    cl2 = subalgebra_closure(table, cen)

    kil = RatMatrix.from_rows([[table.killing(a, b) for b in sl2] for a in sl2])
    sig = signature(kil)
    rep.add("centralizer-sl2R", ok_c and cl2.closed and sig in ((2, 1, 0),),
            {"dim": len(cen), "killing_signature": list(sig)})
    S7 = Subspace(n, e7)
    T = {}
    for s in SIGNS:
        tb = [v.c for v in emb.tower_basis(s)]
        Ts = Subspace(n, tb)
        ok, witness = Ts.dim == 56, None
        for w in S7.basis():
            for b in tb:
                z = table.bracket(w, b)
                if z and not Ts.contains(z):
                    ok, witness = False, "bracket leaves the tower"
                    break
            if not ok:
                break
        rep.add(f"tower{s}-e7-invariant", ok, {"dim": Ts.dim, "witness": witness})
        T[s] = (Ts, tb)
    total = Subspace(n, e7 + cen + T["+"][1] + T["-"][1])
    rep.add("direct-sum-248", total.dim == 248 and S7.dim == 133,
            {"e7": S7.dim, "towers": [T["+"][0].dim, T["-"][0].dim], "sl2": len(cen), "sum": total.dim})
    # sl(2,R) raising/lowering swaps the towers
    swaps = {}
    for name, a in (("K+KL", emb.A(K) + emb.A(KL)), ("K-KL", emb.A(K) - emb.A(KL))):
        for s in SIGNS:
            imgs = [table.bracket(a.c, b) for b in T[s][1]]
            into = all(T[_opp(s)][0].contains(z) for z in imgs)
            zero = all(not z for z in imgs)
            swaps[f"A[{name}] on P{s}"] = "zero" if zero else ("P" + _opp(s) if into else "other")
    ok = sorted(swaps.values()) == ["P+", "P-", "zero", "zero"]
    rep.add("towers-swap-sl2", ok, swaps)
    # e6 commutes with the seven A_Q and G_L, an sl(3,R)
    c6 = centralizer(table, [v.c for v in emb.e6_images])
    want = [emb.A(q).c for q in range(1, 8)] + [emb.G(L).c]
    c6_space = Subspace(n, c6)
    b6 = c6_space.basis()
    sig6 = signature(RatMatrix.from_rows([[table.killing(a, b) for b in b6] for a in b6]))
    rep.add("centralizer-e6", len(c6) == 8 and all(c6_space.contains(v) for v in want)
            and subalgebra_closure(table, c6).closed and sig6 == (5, 3, 0),
            {"dim": len(c6), "killing_signature": list(sig6)})
    center = centralizer(table, [{i: 1} for i in range(n)])
    rep.add("center-trivial", not center, {"dim": len(center)})
    return rep.finish()


def verify_table5(emb: Embedding) -> Report:
    """ad(A_L), ad(G_L) eigenvalues on labeled elements, G_Q and anchors."""
    rep = Report("table5")
    expected = {"I+IL": (-2, -2), "J+JL": (2, -2), "K+KL": (0, 4), "I-IL": (2, 2), "J-JL": (-2, 2),
                "K-KL": (0, -4), "L": (0, 0)}
    from .composition import parse_unit_sum

    X0 = AlbertElem.from_coords([0] * 5 + [1] + [0] * 21)
    Xd = AlbertElem.diag(1, 1, -2)
    for name, (a, g) in expected.items():
        Q = parse_unit_sum(name, emb.split)
        found = {}
        ok = True
        for tag, v in (("labeled", emb.embed_labeled(Q, X0)), ("labeled-diag", emb.embed_labeled(Q, Xd))) + (
                (("G_Q", emb.G_of(Q)),) if name != "L" else ()):
            for hname, h, lam in (("A_L", emb.A(L), a), ("G_L", emb.G(L), g)):
                got = emb.br(h, v)
                ok &= got == v * lam
                found[f"{hname} on {tag}"] = "eigen" if got == v * lam else "no"
        rep.add(f"Table5-{name}", ok, found)
    for q, sg in (("I+", -6), ("I-", 6), ("J+", 6), ("J-", -6)):
        AQ = emb.A_of(emb.label(q))
        rep.add(f"Eq-GA-{q}", emb.br(emb.G(L), AQ) == AQ * sg)
    return rep.finish()


def _dims(rep) -> dict:
    return {str(p.value): p.dim for p in rep.pieces if p.dim}


def verify_gradings(emb: Embedding) -> Report:
    """ad(G_L) on e7, ad(A_L) and ad(G_L) on the whole algebra, and their joint pieces."""
    from .lie import eigen_decomposition, grading_check, joint_pieces, restricted_eigenspaces

    rep = Report("grading")
    T = emb.table
    GL, AL = emb.G(L).c, emb.A(L).c
    e7 = restricted_eigenspaces(T, GL, [v.c for v in emb.e7_basis()], range(-8, 9))
    d = _dims(e7)
    law = grading_check(T, [GL], {(p.value,): p.basis for p in e7.pieces if p.dim})
    rep.add("grading-e7-GL", d == {"-4": 27, "0": 79, "4": 27} and e7.residual == 0 and law.ok,
            {"dims": d, "law": law.ok})
    ea = eigen_decomposition(T, AL, range(-8, 9))
    d = _dims(ea)
    law = grading_check(T, [AL], {(p.value,): p.basis for p in ea.pieces if p.dim})
    rep.add("grading-e8-AL", d == {"-4": 1, "-2": 56, "0": 134, "2": 56, "4": 1} and ea.residual == 0 and law.ok,
            {"dims": d, "law": law.ok,
             "note": "five ad-eigenvalues; the +-4 pieces are A[K+-KL] in sl(2,R), so the three-term "
                     "56 + (133 + 3) + 56 grading is the -2, 0, +2 pieces with g_0 enlarged by them"})
    eg = eigen_decomposition(T, GL, range(-8, 9))
    d = _dims(eg)
    law = grading_check(T, [GL], {(p.value,): p.basis for p in eg.pieces if p.dim})
    rep.add("grading-e8-GL", d == {"-6": 2, "-4": 27, "-2": 54, "0": 82, "2": 54, "4": 27, "6": 2}
            and eg.residual == 0 and law.ok, {"dims": d, "law": law.ok})
    pieces, residual = joint_pieces(T, [GL, AL], [range(-8, 9), range(-8, 9)])
    law = grading_check(T, [GL, AL], pieces)
    jd = {f"({a},{b})": len(v) for (a, b), v in sorted(pieces.items())}
    marginal: dict[str, int] = {}
    for (a, _), v in sorted(pieces.items()):
        marginal[str(a)] = marginal.get(str(a), 0) + len(v)
    want = {"-6": 2, "-4": 27, "-2": 54, "0": 82, "2": 54, "4": 27, "6": 2}
    rep.add("grading-joint-GL-AL", residual == 0 and sum(len(v) for v in pieces.values()) == 248 and law.ok
            and marginal == want, {"pieces": jd, "G_L_marginal": marginal, "law": law.ok})
    return rep.finish()


def verify_complex_tower(emb: Embedding) -> Report:
    """su(3, O' (x) H) inside the (O', O) algebra and its 112-dimensional complement."""
    from .lie import Subspace, centralizer
    from .linalg import RatMatrix, SparseRowReducer, signature

    rep = Report("forms")
    alg, T = emb.alg, emb.table
    quat = (0, 1, 2, 3)  # 1, i, j, k
    gens = [{alg.off_index(s, a, b): 1} for s in range(3) for a in range(8) for b in quat]
    for kind in "DS":
        gens += [{alg.diag_index(kind, 0, q): 1} for q in range(1, 8)]
        gens += [{alg.diag_index(kind, 1, q): 1} for q in quat[1:]]
    gens += [{alg.diag_index(k, 0, q): 1} for k in "GA" for q in range(1, 8)]
    S = Subspace(T.dim, gens)
    frontier = S.basis()
    while frontier:
        new = []
        for x in frontier:
            for y in S.basis():
                z = T.bracket(x, y)
                if z and S.add(z):
                    new.append(z)
        frontier = new
    sub = S.basis()
    cen = centralizer(T, sub)
    kc = RatMatrix.from_rows([[T.killing(a, b) for b in cen] for a in cen])
    sig_c = signature(kc)
    sub_sig = signature(RatMatrix.from_rows([[T.killing(a, b) for b in sub] for a in sub]))
    rep.add("e7(-5)-dim", S.dim == 133 and sub_sig == (64, 69, 0), {"dim": S.dim, "killing_signature": list(sub_sig)})
    rep.add("e7(-5)-centralizer-su2", len(cen) == 3 and sig_c == (0, 3, 0),
            {"dim": len(cen), "killing_signature": list(sig_c)})
    Km = T.killing_matrix()
    red = SparseRowReducer(T.dim)
    for u in sub + cen:
        row: dict[int, Fraction] = {}
        for k, v in u.items():
            for c, w in Km.rows[k].items():
                row[c] = row.get(c, 0) + v * w
        red.add(row)
    comp = [{k: v for k, v in enumerate(vec) if v} for vec in red.kernel()]
    C = Subspace(T.dim, comp)
    # any nonzero element of the compact centralizer will do
    h = cen[0]
    invariant, scalar, lam = True, True, None
    for v in comp:
        w = T.bracket(h, v)
        invariant &= C.contains(w)
        w2 = T.bracket(h, w)
        k = min(v)
        l = w2.get(k, Fraction(0)) / v[k]
        scalar &= all(w2.get(i, 0) == l * v.get(i, 0) for i in set(v) | set(w2))
        lam = l if lam is None else lam
        scalar &= l == lam
    rep.add("complex-tower-112", len(comp) == 112 and invariant and scalar and lam is not None and lam < 0,
            {"dim": len(comp), "ad_h_squared": lam, "invariant": invariant,
             "rational_eigenvalues": "none" if lam is not None and lam < 0 else "possible"})
    return rep.finish()
