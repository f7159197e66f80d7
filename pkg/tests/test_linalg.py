import random
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptional.linalg import (
    RatMatrix,
    SpanCoordinates,
    congruence_diagonal,
    integer_eigenspaces,
    inverse,
    kernel,
    rank,
    signature,
    solve,
)

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_identity_solve():
    b = [Fraction(3), Fraction(-1, 2), Fraction(7)]
    assert solve(RatMatrix.identity(3), b) == b


def test_inconsistent_system_is_a_value():
    A = RatMatrix.from_rows([[1, 1], [2, 2]])
    assert solve(A, [1, 3]) is None


@settings(max_examples=50, deadline=None)
@given(matrices(4, 5))
def test_rank_nullity_and_kernel(rows):
    A = RatMatrix.from_rows(rows)
    K = kernel(A)
    assert rank(A) + len(K) == 5
    assert rank(A) == np.linalg.matrix_rank(np.array(rows, dtype=float))
    for v in K:
        assert all(x == 0 for x in A.apply(v))


@settings(max_examples=50, deadline=None)
@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_round_trip(rows, x):
    A = RatMatrix.from_rows(rows)
    b = A.apply(x)
    sol = solve(A, b)
    assert sol is not None and A.apply(sol) == b
    if rank(A) == 4:
        assert inverse(A) @ A == RatMatrix.identity(4)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=5, max_size=5), matrices(5, 5))
def test_signature_is_congruence_invariant(d, rows):
    P = RatMatrix.from_rows(rows)
    if rank(P) < 5:
        P = P + RatMatrix.identity(5).scale(17)
    S = P.T @ RatMatrix.diag(d) @ P
    want = (sum(x > 0 for x in d), sum(x < 0 for x in d), sum(x == 0 for x in d))
    assert signature(S) == want
    diag = congruence_diagonal(S)
    assert (sum(x > 0 for x in diag), sum(x < 0 for x in diag)) == want[:2]


def test_integer_eigenspaces():
    # conjugate of diag(2, 2, -1, 0) by a unimodular matrix
    P = RatMatrix.from_rows([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    A = P @ RatMatrix.diag([2, 2, -1, 0]) @ inverse(P)
    res, residual = integer_eigenspaces(A, [0, 1, -1, 2, -2])
    dims = {lam: m for lam, m, _ in res if m}
    assert dims == {2: 2, -1: 1, 0: 1} and residual == 0
    rot = RatMatrix.from_rows([[0, -1], [1, 0]])
    res, residual = integer_eigenspaces(rot, [0, 1, -1])
    assert residual == 2


def test_span_coordinates():
    rng = random.Random(0)
    gens = [{rng.randrange(12): Fraction(rng.randint(-3, 3) or 1) for _ in range(4)} for _ in range(6)]
    S = SpanCoordinates(12)
    kept = [i for i, g in enumerate(gens) if S.add(g)]
    target = {}
    for i, c in zip(kept, (2, -1, Fraction(1, 3), 5, 0, 1)):
        for k, v in gens[i].items():
            target[k] = target.get(k, 0) + c * v
    coords = S.coordinates(target)
    assert coords is not None
    back = {}
    for i, c in coords.items():
        for k, v in gens[i].items():
            back[k] = back.get(k, 0) + c * v
    assert {k: v for k, v in back.items() if v} == {k: v for k, v in target.items() if v}
    assert S.coordinates({11: 1, 0: 1}) is None or S.rank == 12


def test_kron_and_commutator():
    A = RatMatrix.from_rows([[1, 2], [3, 4]])
    B = RatMatrix.from_rows([[0, 1], [1, 0]])
    K = A.kron(B)
    assert K.shape == (4, 4) and K[0, 1] == 1 and K[3, 2] == 4
    assert A.commutator(A).is_zero()
    assert (A @ B - B @ A) == A.commutator(B)
