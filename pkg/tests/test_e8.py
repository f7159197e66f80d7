import random
import shutil
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptional.cache import load_or_build, table_path
from exceptional.e8 import DIM, N_OFF, E8Algebra, E8Vector
from exceptional.expr import random_vector
from exceptional.lie import (
    StructureTable,
    jacobiator,
    jacobi_sample,
    subalgebra_closure,
)

seeds = st.integers(0, 10**6)


def test_basis_layout(alg):
    assert len(alg.names) == DIM == len(set(alg.names))
    assert alg.names[alg.off_index(1, 3, 6)] == "Y[K*il]"
    assert alg.names[alg.diag_index("G", 0, 7)] == "G[L]"
    assert alg.names[alg.diag_index("A", 1, 1)] == "A[i]"
    assert alg.names[N_OFF] == "D[i]"


def test_unknown_pair():
    with pytest.raises(ValueError):
        E8Algebra.from_label("H:O")


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_bracket_bilinear_antisymmetric(alg, seed):
    rng = random.Random(seed)
    u, v, w = (random_vector(alg, rng) for _ in range(3))
    assert u.bracket(v) == -v.bracket(u)
    assert (u + w).bracket(v) == u.bracket(v) + w.bracket(v)
    assert u.bracket(v * 3) == u.bracket(v) * 3
    jac = u.bracket(v.bracket(w)) + v.bracket(w.bracket(u)) + w.bracket(u.bracket(v))
    assert jac.is_zero()


def test_zero_vectors(alg):
    z = E8Vector(alg, {})
    x = alg.basis_vector("X[K*i]")
    assert z.bracket(x).is_zero() and x.bracket(z).is_zero()


def test_expansion_route_matches_triples(alg, table):
    """Nested diagonal elements: stored expansions agree with the table."""
    rng = random.Random(4)
    for i in range(N_OFF, DIM):
        vec = {rng.randrange(N_OFF): Fraction(rng.randint(1, 5)) for _ in range(4)}
        assert alg.jacobi_route(i, vec) == table.bracket({i: 1}, vec), alg.names[i]


def test_table_matches_rules_on_sample(alg, table):
    fresh = E8Algebra.from_label("O':O")
    rng = random.Random(7)
    for _ in range(300):
        i, j = sorted(rng.sample(range(DIM), 2))
        assert fresh.basis_bracket(i, j) == table.basis_bracket(i, j)


def test_killing_invariance(table):
    rng = random.Random(11)
    idx = lambda: {rng.randrange(DIM): Fraction(rng.randint(-3, 3)) for _ in range(3)}
    for _ in range(5):
        x, y, z = idx(), idx(), idx()
        assert table.killing(table.bracket(x, y), z) == table.killing(x, table.bracket(y, z))


def test_jacobi_catches_corruption(table):
    bad = table.corrupted(0, 64 + 9)
    assert any(jacobiator(bad, 0, 64 + 9, k) for k in range(DIM) if k not in (0, 73))
    assert not any(jacobiator(table, 0, 64 + 9, k) for k in range(DIM) if k not in (0, 73))
    assert jacobi_sample(table, 2000, seed=3).ok


def test_export_round_trip(table, tmp_path):
    path = tmp_path / "sc.json"
    h = table.save(path)
    again = StructureTable.load(path, h)
    assert again == table and again.content_hash() == table.content_hash() == h
    obj = table.to_json_obj()
    assert list(obj) == ["pair", "basis", "brackets"]
    assert all(b["i"] < b["j"] for b in obj["brackets"][:100])
    assert all("/" in t["c"] for t in obj["brackets"][0]["terms"])
    with pytest.raises(ValueError):
        StructureTable.load(path, "0" * 64)
    rows = table.to_csv().splitlines()
    assert len(rows) == 1 + sum(len(r) for r in table.entries.values())


def test_cache_rejects_tampering(cache_dir, tmp_path):
    src = table_path("O':O", cache_dir)
    dst = table_path("O':O", tmp_path)
    shutil.copy(src, dst)
    shutil.copy(src.with_suffix(".sha256"), dst.with_suffix(".sha256"))
    assert load_or_build("O':O", tmp_path)[1] == "cache"
    digest = dst.with_suffix(".sha256").read_text().strip()
    dst.write_text(dst.read_text().replace('"c":"1/1"', '"c":"-1/1"', 1))
    with pytest.raises(ValueError):
        StructureTable.load(dst, digest)


def test_cartan_subalgebra_abelian(table, alg):
    h = [{alg.diag_index(k, f, q): 1} for k in ("D", "S") for f in (0, 1) for q in (1,)]
    assert subalgebra_closure(table, h).closed


def test_str_uses_canonical_form(alg):
    v = alg.basis_vector("X[K*i]") * Fraction(-1, 2)
    assert str(v) == "-1/2*X[K*i]"
