from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptional.composition import (
    OCTONIONS,
    SPLIT_OCTONIONS,
    cayley_dickson_product,
    conj,
    inner,
    left_mult_operator,
    null_projectors,
    null_sets,
    parse_unit_sum,
    right_mult_operator,
)

rat = st.fractions(min_value=-5, max_value=5, max_denominator=6)
vec8 = st.lists(rat, min_size=8, max_size=8)
SPECS = [OCTONIONS, SPLIT_OCTONIONS]


@pytest.mark.parametrize("spec", SPECS, ids=["O", "O'"])
@settings(max_examples=60, deadline=None)
@given(x=vec8, y=vec8)
def test_norm_is_multiplicative(spec, x, y):
    a, b = spec.element(x), spec.element(y)
    assert (a * b).norm() == a.norm() * b.norm()


@pytest.mark.parametrize("spec", SPECS, ids=["O", "O'"])
@settings(max_examples=60, deadline=None)
@given(x=vec8, y=vec8)
def test_alternative_and_conjugation(spec, x, y):
    a, b = spec.element(x), spec.element(y)
    assert (a * a) * b == a * (a * b)
    assert (b * a) * a == b * (a * a)
    assert conj(a * b) == conj(b) * conj(a)
    assert inner(a, b) == inner(b, a)


@pytest.mark.parametrize("split", [False, True])
def test_tables_agree_with_doubling(split):
    spec = SPLIT_OCTONIONS if split else OCTONIONS
    for r in range(8):
        for c in range(8):
            x, y = [0] * 8, [0] * 8
            x[r], y[c] = 1, 1
            assert list((spec.basis(r) * spec.basis(c)).coeffs) == cayley_dickson_product(x, y, split)


@pytest.mark.parametrize("spec", SPECS, ids=["O", "O'"])
def test_distinct_units_anticommute(spec):
    for p in spec.imaginary_units():
        sq = p * p
        assert sq == spec.one() * (-p.norm())
        for q in spec.imaginary_units():
            if p != q:
                assert p * q == -(q * p)


def test_split_signature():
    norms = [SPLIT_OCTONIONS.basis(a).norm() for a in range(8)]
    assert norms == [1, 1, 1, 1, -1, -1, -1, -1]


@settings(max_examples=40, deadline=None)
@given(x=vec8, y=vec8)
def test_mult_operators(x, y):
    a, b = SPLIT_OCTONIONS.element(x), SPLIT_OCTONIONS.element(y)
    assert left_mult_operator(a).apply(b.coeffs) == list((a * b).coeffs)
    assert right_mult_operator(b).apply(a.coeffs) == list((a * b).coeffs)


def test_null_elements():
    plus, minus = null_projectors(SPLIT_OCTONIONS)
    assert plus * plus == plus and minus * minus == minus
    assert (plus * minus).is_zero()
    Np, Nm = null_sets()
    for k, v in list(Np.items()) + list(Nm.items()):
        assert v.norm() == 0, k
    # K+K+ = 0, K+K- = -L-, K+I+ = J-, K+I- = 0 and cyclic
    for a, b, c in (("K", "I", "J"), ("I", "J", "K"), ("J", "K", "I")):
        for s, o in ((Np, Nm), (Nm, Np)):
            assert (s[a] * s[a]).is_zero()
            L_opp = minus if s is Np else plus
            assert s[a] * o[a] == -L_opp
            assert s[a] * s[b] == o[c]
            assert (s[a] * o[b]).is_zero()


def test_unit_sums():
    s = SPLIT_OCTONIONS
    assert parse_unit_sum("K+KL", s) == s.unit("K") + s.unit("KL")
    assert parse_unit_sum("I-IL", s) == s.unit("I") - s.unit("IL")
    with pytest.raises(KeyError):
        parse_unit_sum("Q", s)


def test_null_projectors_need_split():
    with pytest.raises(ValueError):
        null_projectors(OCTONIONS)


def test_subalgebra_closure():
    H = OCTONIONS.subalgebra(["i", "j", "k"])
    assert H.dim == 4
    with pytest.raises(ValueError):
        OCTONIONS.subalgebra(["i", "j", "l"])


def test_scalar_ops():
    k = SPLIT_OCTONIONS.unit("K")
    assert (k * Fraction(1, 2)) * 2 == k
    assert str(k * 3 - SPLIT_OCTONIONS.one()) == "-1 + 3*K"
