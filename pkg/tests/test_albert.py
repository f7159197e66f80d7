import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptional.albert import (
    IDENTITY,
    AlbertElem,
    E6Operator,
    boost_offdiag,
    det,
    freudenthal,
    jordan,
    jordan_matrix,
    random_albert,
    rotation_offdiag,
    trace,
    trace_form,
    trace_form_fast,
    tracefree_split,
)
from exceptional.composition import OCTONIONS, inner, mul
from exceptional.embedding import random_e6_generator

seeds = st.integers(0, 10_000)


def _det_closed_form(X: AlbertElem) -> Fraction:
    z1, z2, z3 = X.z
    a, b, c = X.a, X.b, X.c
    return (z1 * z2 * z3 - z1 * inner(a, a) - z2 * inner(b, b) - z3 * inner(c, c)
            + 2 * mul(mul(a, b), c).real())


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_jordan_products(seed):
    rng = random.Random(seed)
    X, Y = random_albert(rng, 6), random_albert(rng, 6)
    assert jordan(X, Y) == jordan(Y, X) == jordan_matrix(X, Y)
    assert jordan(IDENTITY, X) == X
    assert trace_form(X, Y) == trace_form_fast(X, Y)
    # Jordan identity (X o Y) o (X o X) = X o (Y o (X o X))
    XX = jordan(X, X)
    assert jordan(jordan(X, Y), XX) == jordan(X, jordan(Y, XX))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_determinant_and_adjugate(seed):
    rng = random.Random(seed)
    X = random_albert(rng, 6)
    d = det(X)
    assert d == _det_closed_form(X)
    Xs = freudenthal(X, X)
    assert jordan(X, Xs) == IDENTITY * d
    assert freudenthal(Xs, Xs) == X * d


def test_det_of_diagonal_and_identity():
    assert det(AlbertElem.diag(2, -3, Fraction(1, 2))) == -3
    assert det(IDENTITY) == 1 and trace(IDENTITY) == 3
    assert freudenthal(IDENTITY, IDENTITY) == IDENTITY


def test_tracefree_split():
    X = random_albert(random.Random(1))
    X0, t = tracefree_split(X)
    assert trace(X0) == 0 and X0 + IDENTITY * (t / 3) == X


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_e6_preserves_det(seed):
    rng = random.Random(seed)
    phi = E6Operator.from_generator(random_e6_generator(rng))
    X, Y = random_albert(rng, 4), random_albert(rng, 4)
    assert phi.preserves_det_infinitesimally(X)
    # dual is minus the trace-form adjoint
    assert trace_form(phi(X), Y) == -trace_form(X, phi.dual(Y))


@pytest.mark.parametrize("slot", [0, 1, 2])
def test_rotation_and_boost_duals(slot):
    x = OCTONIONS.element([0, 1, 0, 2, 0, 0, -1, 1])
    rot = E6Operator.from_generator(rotation_offdiag(slot, x))
    boost = E6Operator.from_generator(boost_offdiag(slot, OCTONIONS.element([3, 1, 0, 0, 0, 0, 0, 2])))
    assert rot.dual == rot
    assert boost.dual == -boost
    assert rot(IDENTITY).is_zero()


def test_type_one_element():
    z, half = Fraction(1, 2), Fraction(1, 2)
    zero = OCTONIONS.zero()
    E = AlbertElem((z, -z, Fraction(0)), zero, zero, OCTONIONS.unit("i") * half)
    assert trace_form(E, E) == 1
    assert jordan(E, E) == AlbertElem.diag(half, half, 0)
    assert freudenthal(E, E) == AlbertElem.diag(0, 0, -half)


@settings(max_examples=30, deadline=None)
@given(seeds, st.fractions(min_value=-4, max_value=4, max_denominator=5),
       st.fractions(min_value=-4, max_value=4, max_denominator=5))
def test_tracefree_product_rules(seed, x, y):
    rng = random.Random(seed)
    X0, _ = tracefree_split(random_albert(rng, 5))
    Y0, _ = tracefree_split(random_albert(rng, 5))
    assert freudenthal(X0, Y0) == jordan(X0, Y0) - IDENTITY * (trace_form(X0, Y0) / 2)
    assert freudenthal(IDENTITY * x, IDENTITY * y) == IDENTITY * (x * y)
    assert freudenthal(IDENTITY * x, Y0) == Y0 * (-x / 2)
