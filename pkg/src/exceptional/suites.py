"""Named verification suites, shared by the command line and the tests."""

from __future__ import annotations

from .e8 import PAIRS
from .report import Report

KILLING_SIGNATURES = {"O':O": (112, 136, 0), "O:O": (0, 248, 0), "O':O'": (128, 120, 0)}

SUITES = ("tables", "jacobi", "killing", "lemma1", "lemma2", "det", "action",
          "e7bracket", "decomp", "grading", "forms")
# suites that go through the labelled Albert algebras and need O' in front of O
EMBEDDED = {"lemma1", "lemma2", "det", "action", "e7bracket", "decomp", "grading", "forms"}


class SuiteError(ValueError):
    pass


class Context:
    """Lazily built algebras and embedding, one per pair."""

    def __init__(self, cache_dir=None):
        self.cache_dir = cache_dir
        self._algs = {}
        self._emb = None

    def algebra(self, pair: str):
        if pair not in self._algs:
            from .cache import load_or_build

            self._algs[pair] = load_or_build(pair, self.cache_dir)[0]
        return self._algs[pair]

    def embedding(self):
        if self._emb is None:
            from .embedding import Embedding

            self._emb = Embedding(self.algebra("O':O"))
        return self._emb


def verify_jacobi(table, full: bool = False, seed: int = 1, samples: int = 100_000) -> Report:
    from .lie import jacobi_full, jacobi_sample

    rep = Report("jacobi", pair=table.pair)
    res = jacobi_full(table) if full else jacobi_sample(table, samples, seed)
    rep.add("Jacobi", res.ok, {"mode": res.mode, "checked": res.checked, "violations": res.violations,
                               "first": list(res.first) if res.first else None})
    return rep.finish()


def verify_killing(table) -> Report:
    rep = Report("killing", pair=table.pair)
    sig = table.signature()
    want = KILLING_SIGNATURES[table.pair]
    rep.add("Killing-signature", sig == want, {"signature": list(sig), "expected": list(want),
                                               "character": sig[0] - sig[1]})
    return rep.finish()


def run_suite(name: str, pair: str = "O':O", *, full: bool = False, seed: int | None = None,
              ctx: Context | None = None) -> Report:
    if pair not in PAIRS:
        raise SuiteError(f"unknown pair {pair!r}; expected one of {sorted(PAIRS)}")
    if name == "all":
        return run_all(pair, full=full, seed=seed, ctx=ctx)
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}, all")
    if name in EMBEDDED and pair != "O':O":
        raise SuiteError(f"suite {name!r} needs the O':O pair")
    ctx = ctx or Context()
    s = 0 if seed is None else seed

    if name == "tables":
        from .tables import verify_tables

        return verify_tables()
    if name == "jacobi":
        return verify_jacobi(ctx.algebra(pair).structure_table(), full, 1 if seed is None else seed)
    if name == "killing":
        return verify_killing(ctx.algebra(pair).structure_table())

    from . import embedding as em
    from .freudenthal import verify_chains

    emb = ctx.embedding()
    if name == "lemma1":
        rep = em.verify_lemma1(emb)
    elif name == "lemma2":
        rep = em.verify_lemma2(emb)
    elif name == "det":
        rep = em.verify_determinant(emb, n_random=200 if full else 50, seed=s)
    elif name == "action":
        rep = em.verify_action_equivalence(emb, n=500 if full else 200, seed=s)
        rep.extend(verify_chains(20, seed=s))
    elif name == "e7bracket":
        rep = em.verify_e7_bracket(emb, n=300 if full else 100, seed=s)
    elif name == "decomp":
        rep = em.verify_decomposition(emb)
    elif name == "grading":
        rep = em.verify_table5(emb)
        rep.extend(em.verify_gradings(emb))
    else:  # forms
        rep = em.verify_complex_tower(emb)
        for p in KILLING_SIGNATURES:
            k = verify_killing(ctx.algebra(p).structure_table())
            c = k.checks[0]
            rep.add(f"Killing-signature-{p}", c.ok, c.detail)
    rep.suite = name
    return rep.finish()


def run_all(pair: str = "O':O", *, full: bool = False, seed: int | None = None, ctx: Context | None = None) -> Report:
    ctx = ctx or Context()
    out = Report("all", pair=pair)
    for name in SUITES:
        if name in EMBEDDED and pair != "O':O":
            continue
        rep = run_suite(name, pair, full=full, seed=seed, ctx=ctx)
        for c in rep.checks:
            out.add(f"{name}:{c.id}", c.ok, c.detail)
    return out.finish()
