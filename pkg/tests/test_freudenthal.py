import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from exceptional.albert import E6Operator, det, random_albert
from exceptional.embedding import random_e6_generator
from exceptional.freudenthal import (
    FTower,
    Theta,
    act,
    bracket,
    lowering_chain,
    raising_chain,
    random_tower,
    rep_consistency,
    verify_chains,
)

seeds = st.integers(0, 10_000)


def _theta(rng):
    phi = E6Operator.from_generator(random_e6_generator(rng, 2))
    return Theta(phi, Fraction(rng.randint(-3, 3), rng.randint(1, 3)), random_albert(rng, 3), random_albert(rng, 3))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_model_is_a_representation(seed):
    rng = random.Random(seed)
    assert rep_consistency(_theta(rng), _theta(rng), random_tower(rng, 4))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_bracket_antisymmetric(seed):
    rng = random.Random(seed)
    t1, t2 = _theta(rng), _theta(rng)
    assert bracket(t1, t2) == bracket(t2, t1).scale(-1)
    assert bracket(t1, t1).is_zero()


def test_chains():
    A = random_albert(random.Random(5), 4)
    up = raising_chain(A, 2)
    assert up[0] == FTower(X=A * 2)
    assert up[2] == FTower(p=12 * det(A)) and up[3].is_zero()
    down = lowering_chain(A, 3)
    assert down[2] == FTower(q=18 * det(A)) and down[3].is_zero()
    assert verify_chains(5, seed=3).ok


def test_dilation_grades_the_tower():
    P = random_tower(random.Random(2))
    Q = act(Theta(rho=Fraction(3)), P)
    assert Q == FTower(P.X, P.Y * -1, P.p * -3, P.q * 3)


def test_tower_coordinates_round_trip():
    P = random_tower(random.Random(9))
    assert FTower.from_coords(P.coords()) == P and len(P.coords()) == 56


def test_dilation_against_translation():
    A = random_albert(random.Random(6), 3)
    rho = Fraction(3, 2)
    # (phi1 - 2 rho1 / 3) A2 with phi1 = 0
    assert bracket(Theta(rho=rho), Theta(A=A)) == Theta(A=A * (-rho * 2 / 3))
    assert bracket(Theta(rho=rho), Theta(B=A)) == Theta(B=A * (rho * 2 / 3))
