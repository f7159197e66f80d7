"""Targeted checks of the embedding; the exhaustive sweeps live in test_acceptance."""

import random
from fractions import Fraction

import pytest

from exceptional.albert import IDENTITY, AlbertElem, trace
from exceptional.embedding import Embedding, random_theta
from exceptional.freudenthal import Theta, bracket, random_tower


def test_needs_split_first_factor(ctx):
    with pytest.raises((ValueError, TypeError)):
        Embedding(ctx.algebra("O:O"))


def test_duality_is_frozen(emb):
    assert emb.duality == {"I-": "phi", "J-": "phi", "K-": "phi", "I+": "dual", "J+": "dual", "K+": "dual"}
    assert emb.tower_duality("+") == ("phi", "dual") == emb.tower_duality("-")


def test_e6_image_count(emb):
    assert len(emb.e6_images) == 78
    assert len(emb.e7_basis()) == 133


def test_l_identity_default(emb):
    # (K o KL) I = G_L / 2, so the literal element -2 (K o KL) I is -G_L
    G_L = emb.G(7)
    assert emb.identity_of(3, 4) * -2 == -G_L
    assert emb.l_identity == G_L * Fraction(-1, 2)


@pytest.mark.parametrize("sign", ["+", "-"])
def test_tower_embedding_inverts(emb, sign):
    P = random_tower(random.Random(3), 4)
    v = emb.embed_tower(P, sign)
    assert emb.extract_tower(v, sign) == P
    assert emb.extract_tower(emb.G(1), sign) is None


def test_embedding_is_a_homomorphism(emb):
    rng = random.Random(21)
    t1, t2 = random_theta(rng), random_theta(rng)
    lhs = emb.br(emb.embed_theta(t1), emb.embed_theta(t2))
    assert lhs == emb.embed_theta(bracket(t1, t2))


def test_action_matches_bracket(emb):
    rng = random.Random(8)
    theta, P = random_theta(rng), random_tower(rng, 3)
    for sign in "+-":
        got = emb.br(emb.embed_theta(theta), emb.embed_tower(P, sign))
        assert emb.extract_tower(got, sign) == emb.act_tower(theta, P, sign)


def test_dilation_eigenvalues(emb):
    """With this sign of G_L, G_L/6 is the rho = 1 dilation: X/3, -Y/3, -p, q."""
    P = random_tower(random.Random(4), 3)
    got = emb.br(emb.G(7) * Fraction(1, 6), emb.embed_tower(P, "+"))
    assert emb.extract_tower(got, "+") == emb.act_tower(Theta(rho=Fraction(1)), P, "+")


def test_trace_term_needs_full_trace(emb):
    """[L X, R I] uses tr(X); the one-third form fails once tr(X) != 0."""
    X = AlbertElem.diag(1, 2, 5)
    LX = emb.br(emb.lab("K+", X), emb.lab("K-", IDENTITY))
    got = emb.br(LX, emb.lab("I+", IDENTITY))
    full = emb.lab("I+", X * 2 - IDENTITY * trace(X)) * -1
    third = emb.lab("I+", X * 2 - IDENTITY * (trace(X) / 3)) * -1
    assert got == full and got != third


def test_verify_small_suites(emb):
    from exceptional.embedding import verify_decomposition, verify_lemma2, verify_table5

    for f in (verify_lemma2, verify_table5, verify_decomposition):
        rep = f(emb)
        assert rep.ok, rep.failures
