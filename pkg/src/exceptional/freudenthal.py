"""Freudenthal's model of e7(-25) and its 56-dimensional representation.

``Theta = (phi, rho, A, B)`` acts on towers ``P = (X, Y, p, q)``.  The
formulas are implemented as written; ``phi_x`` / ``phi_y`` let a caller
swap in the dual on either line when comparing against another model.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .albert import (
    AlbertElem,
    E6Operator,
    cross_operator,
    freudenthal,
    random_albert,
    trace_form,
)

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class Theta:
    phi: E6Operator = field(default_factory=E6Operator.zero)
    rho: Fraction = Fraction(0)
    A: AlbertElem = field(default_factory=AlbertElem.zero)
    B: AlbertElem = field(default_factory=AlbertElem.zero)

    def __add__(self, other: "Theta") -> "Theta":
        return Theta(self.phi + other.phi, self.rho + other.rho, self.A + other.A, self.B + other.B)

    def __sub__(self, other: "Theta") -> "Theta":
        return self + other.scale(-1)

    def scale(self, s) -> "Theta":
        s = Fraction(s)
        return Theta(self.phi.scale(s), self.rho * s, self.A * s, self.B * s)

    def is_zero(self) -> bool:
        return self.phi.is_zero() and self.rho == 0 and self.A.is_zero() and self.B.is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Theta) and self.phi == other.phi and self.rho == other.rho
                and self.A == other.A and self.B == other.B)

    def __hash__(self):
        return hash((self.rho, self.A, self.B))


@dataclass(frozen=True)
class FTower:
    X: AlbertElem = field(default_factory=AlbertElem.zero)
    Y: AlbertElem = field(default_factory=AlbertElem.zero)
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __add__(self, other: "FTower") -> "FTower":
        return FTower(self.X + other.X, self.Y + other.Y, self.p + other.p, self.q + other.q)

    def __sub__(self, other: "FTower") -> "FTower":
        return self + other.scale(-1)

    def scale(self, s) -> "FTower":
        s = Fraction(s)
        return FTower(self.X * s, self.Y * s, self.p * s, self.q * s)

    def is_zero(self) -> bool:
        return self.X.is_zero() and self.Y.is_zero() and self.p == 0 and self.q == 0

    def coords(self) -> list[Fraction]:
        return self.X.coords() + self.Y.coords() + [Fraction(self.p), Fraction(self.q)]

    @classmethod
    def from_coords(cls, v) -> "FTower":
        v = list(v)
        return cls(AlbertElem.from_coords(v[:27]), AlbertElem.from_coords(v[27:54]), Fraction(v[54]), Fraction(v[55]))


def act(theta: Theta, P: FTower, phi_x: str = "phi", phi_y: str = "dual") -> FTower:
    """Theta acting on a tower::

        X -> phi(X) + rho X / 3 + 2 B*Y + A q
        Y -> 2 A*X + phi'(Y) - rho Y / 3 + B p
        p -> tr(A o Y) - rho p
        q -> tr(B o X) + rho q
    """
    phi, A, B, rho = theta.phi, theta.A, theta.B, Fraction(theta.rho)
    fx = phi if phi_x == "phi" else phi.dual
    fy = phi.dual if phi_y == "dual" else phi
    X = fx(P.X) + P.X * (rho * THIRD) + freudenthal(B, P.Y) * 2 + A * P.q
    Y = freudenthal(A, P.X) * 2 + fy(P.Y) - P.Y * (rho * THIRD) + B * P.p
    p = trace_form(A, P.Y) - rho * P.p
    q = trace_form(B, P.X) + rho * P.q
    return FTower(X, Y, p, q)


def bracket(t1: Theta, t2: Theta) -> Theta:
    """Commutator of two e7 elements::

        phi = [phi1, phi2] - 2<A1,B2> + 2<A2,B1>
        rho = -tr(A1 o B2) + tr(A2 o B1)
        A   = (phi1 - 2 rho1/3) A2 - (phi2 - 2 rho2/3) A1
        B   = (phi1' + 2 rho1/3) B2 - (phi2' + 2 rho2/3) B1
    """
    phi = t1.phi.commutator(t2.phi) - cross_operator(t1.A, t2.B).scale(2) + cross_operator(t2.A, t1.B).scale(2)
    rho = -trace_form(t1.A, t2.B) + trace_form(t2.A, t1.B)
    A = t1.phi(t2.A) - t2.A * (TWO_THIRDS * t1.rho) - t2.phi(t1.A) + t1.A * (TWO_THIRDS * t2.rho)
    B = t1.phi.dual(t2.B) + t2.B * (TWO_THIRDS * t1.rho) - t2.phi.dual(t1.B) - t1.B * (TWO_THIRDS * t2.rho)
    return Theta(phi, rho, A, B)


def rep_consistency(t1: Theta, t2: Theta, P: FTower) -> bool:
    """act([t1, t2], P) == act(t1, act(t2, P)) - act(t2, act(t1, P))."""
    lhs = act(bracket(t1, t2), P)
    rhs = act(t1, act(t2, P)) - act(t2, act(t1, P))
    return lhs.coords() == rhs.coords()


def raising_chain(A: AlbertElem, q, steps: int = 4) -> list[FTower]:
    """Repeated action of (0, 0, A, 0) starting from (0, 0, 0, q)."""
    theta = Theta(A=A)
    P = FTower(q=Fraction(q))
    out = []
    for _ in range(steps):
        P = act(theta, P)
        out.append(P)
    return out


def lowering_chain(B: AlbertElem, p, steps: int = 4) -> list[FTower]:
    theta = Theta(B=B)
    P = FTower(p=Fraction(p))
    out = []
    for _ in range(steps):
        P = act(theta, P)
        out.append(P)
    return out


def random_tower(rng: random.Random, bound: int = 10, density: float = 1.0) -> FTower:
    return FTower(random_albert(rng, bound, density), random_albert(rng, bound, density),
                  Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                  Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))


def verify_chains(n: int = 20, seed: int = 0):
    """Raising/lowering chains: the third step lands on the other anchor with
    6 q det(A) (resp. 6 p det(B)), and the fourth power kills any tower."""
    from .albert import det
    from .report import Report

    rng = random.Random(seed)
    rep = Report("chains")
    ok_raise = ok_lower = ok_kill = True
    bad = []
    for case in range(n):
        A, B = random_albert(rng, 5), random_albert(rng, 5)
        q = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        up = raising_chain(A, q)
        down = lowering_chain(B, q)
        r_ok = up[2] == FTower(p=6 * q * det(A)) and up[3].is_zero()
        l_ok = down[2] == FTower(q=6 * q * det(B)) and down[3].is_zero()
        P = random_tower(rng, 5)
        k_ok = True
        for theta in (Theta(A=A), Theta(B=B)):
            Q = P
            for _ in range(4):
                Q = act(theta, Q)
            k_ok &= Q.is_zero()
        ok_raise &= r_ok
        ok_lower &= l_ok
        ok_kill &= k_ok
        if not (r_ok and l_ok and k_ok):
            bad.append(case)
    rep.add("Eq-Araise", ok_raise, {"cases": n})
    rep.add("Eq-Braise", ok_lower, {"cases": n})
    rep.add("chain-nilpotent", ok_kill, {"cases": n, "failed_cases": bad})
    return rep.finish()
