"""A small expression language for elements of the 248-dimensional algebra.

Grammar::

    expr      := '-'? term (('+' | '-') term)*
    term      := rational '*'? atom | atom | '0'
    atom      := basisname | '[' expr ',' expr ']' | '(' expr ')'
    basisname := ('X'|'Y'|'Z') '[' units '*' units ']' | ('D'|'S'|'G'|'A') '[' units ']'
    units     := unit (('+'|'-') unit)*

A unit is any basis name of either factor; sums such as ``K+KL`` expand
linearly.  Errors carry the byte offset and the tokens that would have
been accepted there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .e8 import DIAG_KINDS, SLOTS, E8Algebra, E8Vector

_UNIT_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l", "I", "J", "K", "KL", "JL", "IL", "L")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        tail = f"; expected one of {', '.join(repr(e) for e in self.expected)}" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{tail}")

    def to_json_obj(self) -> dict:
        return {"error": "syntax", "message": str(self), "offset": self.offset, "expected": list(self.expected)}


# -- syntax tree


@dataclass(frozen=True)
class Units:
    terms: tuple[tuple[int, str], ...]  # (sign, unit name)
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Basis:
    kind: str
    units: tuple[Units, ...]


@dataclass(frozen=True)
class Scaled:
    coeff: Fraction
    node: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, "Node"], ...]


@dataclass(frozen=True)
class Bracket:
    lhs: "Node"
    rhs: "Node"


@dataclass(frozen=True)
class Zero:
    pass


Node = Union[Basis, Scaled, Sum, Bracket, Zero]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode("utf-8"))

    def fail(self, message: str, expected=(), pos: int | None = None):
        raise ExprSyntaxError(message, self.offset(pos), tuple(expected))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.fail(f"expected {ch!r}" if self.peek() else "unexpected end of input", (ch,))
        self.pos += 1

    def parse(self) -> Node:
        node = self.expr()
        if self.peek():
            self.fail(f"unexpected {self.peek()!r}", ("+", "-", "end of input"))
        return node

    def expr(self) -> Node:
        lead = 1
        if self.peek() == "-" and not self._digit_after_sign():
            lead = -1
            self.pos += 1
        terms = [(lead, self.term(allow_sign=True))]
        while self.peek() in ("+", "-"):
            sign = 1 if self.text[self.pos] == "+" else -1
            self.pos += 1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 and terms[0][0] == 1 else Sum(tuple(terms))

    def rational(self, allow_sign: bool) -> Fraction | None:
        self.skip()
        start = self.pos
        sign = 1
        if allow_sign and self.peek() == "-" and self._digit_after_sign():
            sign = -1
            self.pos += 1
            self.skip()
        if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
            self.pos = start
            return None
        num = self._digits()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            self.skip()
            if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
                self.fail("expected a denominator", ("digit",))
            den = self._digits()
            if den == 0:
                self.fail("zero denominator", (), self.pos - 1)
        return Fraction(sign * num, den)

    def _digit_after_sign(self) -> bool:
        p = self.pos + 1
        while p < len(self.text) and self.text[p].isspace():
            p += 1
        return p < len(self.text) and self.text[p].isdigit()

    def _digits(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def term(self, allow_sign: bool = False) -> Node:
        c = self.rational(allow_sign)
        if c is None:
            return self.atom()
        if self.peek() == "*":
            self.pos += 1
            return Scaled(c, self.atom())
        if self.peek() in ("[", "(") or self.peek().isalpha():
            return Scaled(c, self.atom())
        if c == 0:
            return Zero()
        self.fail("a nonzero scalar needs a basis element", ("*", "[", "(") + SLOTS + DIAG_KINDS)

    def atom(self) -> Node:
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            lhs = self.expr()
            self.expect(",")
            rhs = self.expr()
            self.expect("]")
            return Bracket(lhs, rhs)
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch in SLOTS or ch in DIAG_KINDS:
            self.pos += 1
            self.expect("[")
            first = self.units()
            if ch in SLOTS:
                self.expect("*")
                second = self.units()
                self.expect("]")
                return Basis(ch, (first, second))
            self.expect("]")
            return Basis(ch, (first,))
        what = f"unexpected {ch!r}" if ch else "unexpected end of input"
        self.fail(what, ("[", "(", "digit") + SLOTS + DIAG_KINDS)

    def units(self) -> Units:
        self.skip()
        start = self.pos
        terms = []
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        while True:
            self.skip()
            p = self.pos
            while p < len(self.text) and (self.text[p].isalnum()):
                p += 1
            name = self.text[self.pos:p]
            if not name:
                self.fail("expected a unit name", _UNIT_NAMES)
            if name not in _UNIT_NAMES:
                self.fail(f"unknown unit {name!r}", _UNIT_NAMES)
            terms.append((sign, name))
            self.pos = p
            nxt = self.peek()
            if nxt in ("+", "-"):
                sign = 1 if nxt == "+" else -1
                self.pos += 1
                continue
            break
        return Units(tuple(terms), self.offset(start))


def parse(text: str) -> Node:
    return _Parser(text).parse()


# -- evaluation


def _unit_vector(alg: E8Algebra, units: Units, factor: int | None) -> list[tuple[int, int, Fraction]]:
    """(factor, unit index, coefficient) for each unit; the factor is deduced from the name."""
    out = []
    for sign, name in units.terms:
        hits = [f for f in (0, 1) if name in alg.factors[f].names and (factor is None or f == factor)]
        if not hits:
            where = "either factor" if factor is None else f"factor {factor + 1}"
            raise ExprSyntaxError(f"unit {name!r} does not belong to {where} of {alg.pair}", units.offset)
        f = hits[0]
        out.append((f, alg.factors[f].names.index(name), Fraction(sign)))
    return out


def _basis_value(alg: E8Algebra, node: Basis) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    if node.kind in SLOTS:
        slot = SLOTS.index(node.kind)
        for _, a, ca in _unit_vector(alg, node.units[0], 0):
            for _, b, cb in _unit_vector(alg, node.units[1], 1):
                k = alg.off_index(slot, a, b)
                out[k] = out.get(k, 0) + ca * cb
    else:
        for f, q, c in _unit_vector(alg, node.units[0], None):
            if q == 0:
                raise ExprSyntaxError(f"{node.kind}[1] is not a basis element", node.units[0].offset)
            k = alg.diag_index(node.kind, f, q)
            out[k] = out.get(k, 0) + c
    return {k: v for k, v in out.items() if v}


def evaluate(node: Node | str, alg: E8Algebra) -> E8Vector:
    if isinstance(node, str):
        node = parse(node)
    if isinstance(node, Zero):
        return E8Vector(alg, {})
    if isinstance(node, Basis):
        return E8Vector(alg, _basis_value(alg, node))
    if isinstance(node, Scaled):
        return evaluate(node.node, alg) * node.coeff
    if isinstance(node, Sum):
        total = E8Vector(alg, {})
        for sign, t in node.terms:
            total = total + evaluate(t, alg) * sign
        return total
    if isinstance(node, Bracket):
        return evaluate(node.lhs, alg).bracket(evaluate(node.rhs, alg))
    raise TypeError(f"not an expression node: {node!r}")


eval_expr = evaluate


# -- canonical printing


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_vector(v: E8Vector) -> str:
    """Basis-ordered ``c*NAME`` terms; ``0`` for the zero vector."""
    if not v.c:
        return "0"
    parts = []
    for k in sorted(v.c):
        c = v.c[k]
        name = v.alg.names[k]
        if not parts:
            parts.append(f"{_fmt(c)}*{name}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {_fmt(abs(c))}*{name}")
    return " ".join(parts)


def random_vector(alg: E8Algebra, rng: random.Random, terms: int = 5, bound: int = 10) -> E8Vector:
    coeffs = {}
    for _ in range(terms):
        k = rng.randrange(len(alg.names))
        coeffs[k] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return E8Vector(alg, coeffs)
