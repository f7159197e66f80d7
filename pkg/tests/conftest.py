import os
from pathlib import Path

import pytest

from exceptional.suites import Context

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def cache_dir(request) -> Path:
    env = os.environ.get("EXCEPTIONAL_CACHE")
    if env:
        return Path(env)
    # tables are hash-checked on load, so persisting them across runs is safe
    return Path(request.config.cache.mkdir("exceptional-tables"))


@pytest.fixture(scope="session")
def ctx(cache_dir) -> Context:
    return Context(cache_dir)


@pytest.fixture(scope="session")
def alg(ctx):
    return ctx.algebra("O':O")


@pytest.fixture(scope="session")
def table(alg):
    return alg.structure_table()


@pytest.fixture(scope="session")
def emb(ctx):
    return ctx.embedding()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
