"""The fourteen acceptance criteria, one test each.

Each test prints a single PASS/FAIL line and records it for the terminal
summary.  Table construction happens in the session fixtures and is not
part of any timing.
"""

import random
import time

from conftest import ACCEPTANCE
from exceptional import embedding as em
from exceptional.expr import evaluate, format_vector, random_vector
from exceptional.freudenthal import verify_chains
from exceptional.lie import StructureTable, jacobi_full, jacobi_sample
from exceptional.suites import KILLING_SIGNATURES
from exceptional.tables import verify_tables


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def timed(f, *args, **kw):
    t0 = time.perf_counter()
    out = f(*args, **kw)
    return out, time.perf_counter() - t0


def report_ok(rep, limit: float, seconds: float) -> tuple[bool, str]:
    bad = [c.id for c in rep.failures]
    ok = rep.ok and seconds < limit
    return ok, f"{len(rep.checks) - len(bad)}/{len(rep.checks)} checks, {seconds:.1f}s (limit {limit:.0f}s)" + (
        f", failing: {bad}" if bad else "")


def test_01_multiplication_tables():
    rep, s = timed(verify_tables)
    refs = [rep.get("Table2-reference"), rep.get("Table3-reference")]
    mism = sum(len(c.detail["mismatches"]) for c in refs)
    ok = all(c.ok for c in refs) and s < 1
    record(1, ok, f"{98 - mism}/98 entries match the reference tables in {s:.2f}s; "
                  f"differences: {refs[0].detail['mismatches'] + refs[1].detail['mismatches']}")


def test_02_jacobi(table):
    full, s_full = timed(jacobi_full, table)
    samp, s_samp = timed(jacobi_sample, table, 100_000, 1)
    ok = full.ok and samp.ok and s_full < 600 and s_samp < 10
    record(2, ok, f"full: {full.checked} triples, {full.violations} violations, {s_full:.1f}s; "
                  f"sampled: {samp.checked} triples, {samp.violations} violations, {s_samp:.1f}s")


def test_03_killing_signatures(ctx):
    parts, ok = [], True
    for pair, want in KILLING_SIGNATURES.items():
        t = ctx.algebra(pair).structure_table()
        sig, s = timed(t.signature)
        ok &= sig == want and s < 120
        parts.append(f"{pair} {sig} in {s:.1f}s")
    record(3, ok, "; ".join(parts))


def test_04_decomposition(emb):
    rep, s = timed(em.verify_decomposition, emb)
    record(4, *report_ok(rep, 60, s))


def test_05_lemma1(emb):
    rep, s = timed(em.verify_lemma1, emb)
    record(5, *report_ok(rep, 120, s))


def test_06_lemma2(emb):
    rep, s = timed(em.verify_lemma2, emb)
    record(6, *report_ok(rep, 120, s))


def test_07_determinant(emb):
    rep, s = timed(em.verify_determinant, emb, n_random=50, seed=0)
    record(7, *report_ok(rep, 600, s))


def test_08_freudenthal_action(emb):
    rep, s = timed(em.verify_action_equivalence, emb, n=200, seed=0)
    for id in ("dilation-scaling", "doublet-AL"):
        rep.get(id)
    record(8, *report_ok(rep, 600, s))


def test_09_e7_bracket(emb):
    rep, s = timed(em.verify_e7_bracket, emb, n=100, seed=0)
    for id in ("Eq-FreudPhi-FreudB", "Eq-e6AB-alternate", "Eq-AstarA"):
        rep.get(id)
    record(9, *report_ok(rep, 600, s))


def test_10_chains():
    rep, s = timed(verify_chains, 20, seed=0)
    record(10, *report_ok(rep, 60, s))


def test_11_table5(emb):
    rep, s = timed(em.verify_table5, emb)
    record(11, *report_ok(rep, 60, s))


def test_12_gradings(emb):
    rep, s = timed(em.verify_gradings, emb)
    joint = rep.get("grading-joint-GL-AL").detail
    ok, text = report_ok(rep, 300, s)
    record(12, ok, text + f"; G_L marginal of the {len(joint['pieces'])} joint pieces: {joint['G_L_marginal']}")


def test_13_complex_tower(emb):
    rep, s = timed(em.verify_complex_tower, emb)
    record(13, *report_ok(rep, 120, s))


def test_14_round_trips(table, alg, tmp_path):
    path = tmp_path / "sc.json"
    digest = table.save(path)
    again = StructureTable.load(path, digest)
    same = again == table and again.content_hash() == table.content_hash()
    rng = random.Random(2024)
    vecs = [random_vector(alg, rng, terms=rng.randint(0, 8)) for _ in range(100)]
    rt = sum(evaluate(format_vector(v), alg) == v for v in vecs)
    record(14, same and rt == 100, f"export/import hash match: {same}; parse/print {rt}/100")
