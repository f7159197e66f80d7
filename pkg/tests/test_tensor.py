from hypothesis import given, settings
from hypothesis import strategies as st

from exceptional.composition import OCTONIONS, SPLIT_OCTONIONS, inner
from exceptional.tensor import TensorPair, tconj, tensor, tinner, tmul, toperator, toperator_right

PAIR = TensorPair(SPLIT_OCTONIONS, OCTONIONS)
rat = st.fractions(min_value=-3, max_value=3, max_denominator=4)
vec8 = st.lists(rat, min_size=8, max_size=8)


@settings(max_examples=30, deadline=None)
@given(vec8, vec8, vec8, vec8)
def test_product_of_pure_tensors_factorizes(a1, b1, a2, b2):
    x = tensor(SPLIT_OCTONIONS.element(a1), OCTONIONS.element(b1), PAIR)
    y = tensor(SPLIT_OCTONIONS.element(a2), OCTONIONS.element(b2), PAIR)
    want = tensor(SPLIT_OCTONIONS.element(a1) * SPLIT_OCTONIONS.element(a2),
                  OCTONIONS.element(b1) * OCTONIONS.element(b2), PAIR)
    assert tmul(x, y) == want
    n1 = inner(SPLIT_OCTONIONS.element(a1), SPLIT_OCTONIONS.element(a2))
    assert tinner(x, y) == n1 * inner(OCTONIONS.element(b1), OCTONIONS.element(b2))


@settings(max_examples=10, deadline=None)
@given(st.lists(rat, min_size=64, max_size=64), st.lists(rat, min_size=64, max_size=64))
def test_operators_and_conjugation(u, v):
    x, y = PAIR.elem(u), PAIR.elem(v)
    assert toperator(x).apply(y.coeffs) == list(tmul(x, y).coeffs)
    assert toperator_right(y).apply(x.coeffs) == list(tmul(x, y).coeffs)
    assert tconj(tconj(x)) == x
    assert tconj(tmul(x, y)) == tmul(tconj(y), tconj(x))


def test_layout_and_signature():
    assert PAIR.unit_name(8 * 3 + 6) == "K*il"
    d = PAIR.inner_signature_diagonal()
    assert sum(x > 0 for x in d) == 32 and sum(x < 0 for x in d) == 32
