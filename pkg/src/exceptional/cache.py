"""Build-once, load-later structure tables, keyed by algebra pair."""

from __future__ import annotations

import os
from pathlib import Path

from .e8 import E8Algebra
from .lie import StructureTable


def default_cache_dir() -> Path:
    env = os.environ.get("EXCEPTIONAL_CACHE")
    return Path(env) if env else Path.home() / ".cache" / "exceptional"


def slug(pair: str) -> str:
    return pair.replace("'", "p").replace(":", "")


def table_path(pair: str, cache_dir=None) -> Path:
    return Path(cache_dir or default_cache_dir()) / f"sc_{slug(pair)}.json"


def load_or_build(pair: str = "O':O", cache_dir=None, rebuild: bool = False) -> tuple[E8Algebra, str]:
    """Algebra with its table attached, and where the table came from.

    A cached table is accepted only if its content hash matches the sidecar
    written next to it; anything else triggers a fresh build.
    """
    alg = E8Algebra.from_label(pair)
    path = table_path(pair, cache_dir)
    sidecar = path.with_suffix(".sha256")
    if not rebuild and path.exists() and sidecar.exists():
        try:
            table = StructureTable.load(path, sidecar.read_text().strip())
            alg.attach_table(table)
            return alg, "cache"
        except (ValueError, KeyError, OSError):
            pass
    table = alg.structure_table()
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    digest = table.save(tmp)
    os.replace(tmp, path)
    sidecar.write_text(digest + "\n")
    return alg, "built"
