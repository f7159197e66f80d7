import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptional.expr import (
    Basis,
    Bracket,
    ExprSyntaxError,
    Sum,
    evaluate,
    format_vector,
    parse,
    random_vector,
)


def test_grammar_shapes():
    node = parse("X[K*i] + 2*D[j]")
    assert isinstance(node, Sum) and len(node.terms) == 2
    assert isinstance(parse("[G[K+KL], G[I+IL]]"), Bracket)
    assert parse("  X [ K * i ] ") == parse("X[K*i]")
    assert isinstance(parse("(X[1*i])"), Basis)


@pytest.mark.parametrize("text,offset", [("X[Q*i]", 2), ("X[K*i", 6 - 1), ("3", 1), ("[X[K*i],]", 8), ("X[K*i] )", 7)])
def test_syntax_errors(text, offset):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.expected


def test_unknown_unit_message():
    with pytest.raises(ExprSyntaxError, match=r"unknown unit 'Q' at offset 2"):
        parse("X[Q*i]")


def test_byte_offsets():
    with pytest.raises(ExprSyntaxError) as info:
        parse("X[K*i] + ±")
    assert info.value.offset == 9


def test_evaluation(alg):
    assert evaluate("0*X[1*i]", alg).is_zero()
    assert evaluate("0", alg).is_zero()
    v = evaluate("G[K+KL]", alg)
    assert v == evaluate("G[K]", alg) + evaluate("G[KL]", alg)
    # [G_{K+}, G_{I+}] = -4 G_{J-} with G_{Q+-} = (G_Q +- G_QL)/2
    lhs = evaluate("[1/2*G[K+KL], 1/2*G[I+IL]]", alg)
    assert lhs == evaluate("-4*(1/2*G[J-JL])", alg)
    assert evaluate("[G[K+KL],G[I+IL]]", alg) == evaluate("-8*G[J-JL]", alg)
    r = evaluate("[A[L], A[K-KL]]", alg)
    assert not r.is_zero() and r == evaluate("4*A[K-KL]", alg)


def test_eval_rejects_wrong_factor(alg):
    with pytest.raises(ExprSyntaxError):
        evaluate("X[i*K]", alg)
    with pytest.raises(ExprSyntaxError):
        evaluate("D[1]", alg)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_print_parse_round_trip(alg, seed):
    v = random_vector(alg, random.Random(seed), terms=6)
    assert evaluate(format_vector(v), alg) == v


def test_negative_leading_terms(alg):
    v = evaluate("-X[K*i] - 3/2 D[i]", alg)
    assert v.c == {alg.index("X[K*i]"): -1, alg.index("D[i]"): Fraction(-3, 2)}
    assert format_vector(v) == "-1*X[K*i] - 3/2*D[i]"
