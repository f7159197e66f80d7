"""Literal transcriptions of the two reference multiplication tables.

These are kept separate from the tables the algebra actually uses so that
the reference form can be compared entry by entry; see ``compare``.
"""

from __future__ import annotations

from .composition import OCTONION_NAMES, SPLIT_NAMES, _TABLES, cayley_dickson_product
from .report import Report

# row * column, imaginary units only, as given in the reference
REFERENCE_OCTONION = """
 -1   k  -j   jl -kl  l   il
 -k  -1   i  -il  l   kl  jl
  j  -i  -1  -l   il -jl  kl
 -jl  il  l  -1   i  -j  -k
  kl  l  -il -i  -1   k  -j
  l  -kl  jl  j  -k  -1  -i
 -il -jl -kl  k   j   i  -1
"""

REFERENCE_SPLIT = """
 -1   K  -J   JL -KL -L   IL
 -K  -1   I  -IL -L   KL  JL
  J  -I  -1  -L   IL -JL  KL
 -JL  IL  L   1  -I   J   K
  KL  L  -IL  I   1  -K   J
  L  -KL  JL -J   K   1   I
 -IL -JL -KL -K  -J  -I   1
"""


def reference(split: bool) -> list[list[str]]:
    text = REFERENCE_SPLIT if split else REFERENCE_OCTONION
    return [line.split() for line in text.strip().splitlines()]


def _entry(sign: int, idx: int, names) -> str:
    return ("-" if sign < 0 else "") + names[idx]


def stored(split: bool) -> list[list[str]]:
    names = SPLIT_NAMES if split else OCTONION_NAMES
    t = _TABLES[split]
    return [[_entry(*t[r][c], names) for c in range(1, 8)] for r in range(1, 8)]


def compare(split: bool) -> list[tuple[str, str, str, str]]:
    """(row, column, reference, stored) for every entry that differs."""
    names = SPLIT_NAMES if split else OCTONION_NAMES
    out = []
    for r, (prow, srow) in enumerate(zip(reference(split), stored(split)), start=1):
        for c, (p, s) in enumerate(zip(prow, srow), start=1):
            if p != s:
                out.append((names[r], names[c], p, s))
    return out


def format_table(split: bool) -> str:
    names = (SPLIT_NAMES if split else OCTONION_NAMES)[1:]
    rows = stored(split)
    w = 5
    lines = [" " * w + "".join(n.rjust(w) for n in names)]
    lines += [n.rjust(w) + "".join(e.rjust(w) for e in row) for n, row in zip(names, rows)]
    return "\n".join(lines)


def _doubling_mismatches(split: bool) -> int:
    bad = 0
    t = _TABLES[split]
    for r in range(8):
        for c in range(8):
            x, y = [0] * 8, [0] * 8
            x[r], y[c] = 1, 1
            sign, idx = t[r][c]
            want = [0] * 8
            want[idx] = sign
            bad += cayley_dickson_product(x, y, split) != want
    return bad


def verify_tables() -> Report:
    rep = Report("tables", pair="O,O'")
    for split, tag in ((False, "Table2"), (True, "Table3")):
        diff = compare(split)
        rep.add(f"{tag}-reference", not diff, {"entries": 49, "mismatches": [list(d) for d in diff]})
        rep.add(f"{tag}-doubling", _doubling_mismatches(split) == 0, {"entries": 64})
    return rep.finish()
