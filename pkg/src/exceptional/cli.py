"""Command line: ``python3 -m exceptional <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
or parse errors.  With ``--json`` every result goes to stdout as JSON and
errors go to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .e8 import PAIRS

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_candidates(text: str) -> list[Fraction]:
    """``"0,±2,±4"`` -> [0, 2, -2, 4, -4]; ``+-`` works in place of ``±``."""
    out: list[Fraction] = []
    for tok in text.replace("+-", "±").split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            if tok.startswith("±"):
                v = Fraction(tok[1:])
                vals = [v, -v]
            else:
                vals = [Fraction(tok)]
        except ValueError as exc:
            raise UsageError(f"bad candidate eigenvalue {tok!r}") from exc
        out.extend(x for x in vals if x not in out)
    if not out:
        raise UsageError("no candidate eigenvalues given")
    return out


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="exceptional", description="Exact e8 over pairs of composition algebras.")
    p.add_argument("--json", action="store_true", help="machine-readable output and errors")
    p.add_argument("--cache", metavar="DIR", help="structure-table cache directory")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    t = sub.add_parser("tables", help="print a multiplication table")
    t.add_argument("--algebra", choices=["O", "O'"], required=True)
    t.add_argument("--check", action="store_true", help="compare with the reference tables")

    b = sub.add_parser("build", help="build or load a structure table")
    b.add_argument("--pair", choices=sorted(PAIRS), default="O':O")
    b.add_argument("--rebuild", action="store_true")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True,
                   choices=["tables", "jacobi", "killing", "lemma1", "lemma2", "det", "action",
                            "e7bracket", "decomp", "grading", "forms", "all"])
    v.add_argument("--pair", choices=sorted(PAIRS), default="O':O")
    v.add_argument("--full", action="store_true")
    v.add_argument("--seed", type=int)
    v.add_argument("--out", metavar="FILE")

    br = sub.add_parser("bracket", help="bracket of two element expressions")
    br.add_argument("--lhs", required=True)
    br.add_argument("--rhs", required=True)
    br.add_argument("--pair", choices=sorted(PAIRS), default="O':O")

    s = sub.add_parser("spectrum", help="rational eigenvalues of ad(element)")
    s.add_argument("--element", required=True)
    s.add_argument("--candidates", default="0,±1,±2,±3,±4,±5,±6")
    s.add_argument("--pair", choices=sorted(PAIRS), default="O':O")

    e = sub.add_parser("export", help="export structure constants")
    e.add_argument("--what", choices=["sc"], default="sc")
    e.add_argument("--format", choices=["json", "csv"], default="json")
    e.add_argument("--out", required=True, metavar="FILE")
    e.add_argument("--pair", choices=sorted(PAIRS), default="O':O")
    for sp in (t, b, v, br, s, e):
        sp.add_argument("--cache", metavar="DIR", dest="sub_cache", default=None)
        sp.add_argument("--json", action="store_true", dest="sub_json")
    return p


def _emit(args, obj: dict, text: str) -> None:
    print(json.dumps(obj, indent=2) if args.json else text)


def _algebra(args, pair: str):
    from .cache import load_or_build

    return load_or_build(pair, args.cache)[0]


def _coords(v) -> dict[str, str]:
    return {v.alg.names[k]: _fmt(c) for k, c in sorted(v.c.items())}


def cmd_tables(args) -> int:
    from .tables import compare, format_table, stored

    split = args.algebra == "O'"
    obj = {"algebra": args.algebra, "table": stored(split)}
    text = format_table(split)
    status = OK
    if args.check:
        diff = compare(split)
        obj["check"] = {"entries": 49, "mismatches": [dict(row=r, col=c, reference=p, stored=s) for r, c, p, s in diff]}
        lines = [f"{r}*{c}: reference {p}, stored {s}" for r, c, p, s in diff]
        text += "\n\n" + (f"{len(diff)} of 49 entries differ from the reference table:\n" + "\n".join(lines)
                          if diff else "all 49 entries match the reference table")
        status = FAILED if diff else OK
    _emit(args, obj, text)
    return status


def cmd_build(args) -> int:
    import time

    from .cache import load_or_build, table_path

    cache = args.cache
    t0 = time.perf_counter()
    alg, source = load_or_build(args.pair, cache, rebuild=args.rebuild)
    table = alg.structure_table()
    obj = {"pair": args.pair, "source": source, "path": str(table_path(args.pair, cache)),
           "nonzero_brackets": len(table), "sha256": table.content_hash(),
           "seconds": round(time.perf_counter() - t0, 3)}
    _emit(args, obj, "\n".join(f"{k}: {v}" for k, v in obj.items()))
    return OK


def cmd_verify(args) -> int:
    from .suites import Context, SuiteError, run_suite

    try:
        rep = run_suite(args.suite, args.pair, full=args.full, seed=args.seed, ctx=Context(args.cache))
    except SuiteError as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        Path(args.out).write_text(rep.to_json() + "\n", encoding="utf-8")
    obj = rep.to_json_obj()
    s = obj["summary"]
    text = "\n".join(rep.summary_lines() + [f"{rep.suite} ({rep.pair}): {s['passed']}/{s['total']} passed in {s['seconds']}s"])
    _emit(args, obj, text)
    return OK if rep.ok else FAILED


def cmd_bracket(args) -> int:
    from .expr import evaluate, format_vector, parse

    lhs, rhs = parse(args.lhs), parse(args.rhs)
    alg = _algebra(args, args.pair)
    u, w = evaluate(lhs, alg), evaluate(rhs, alg)
    r = u.bracket(w)
    obj = {"pair": args.pair, "lhs": format_vector(u), "rhs": format_vector(w),
           "result": format_vector(r), "coordinates": _coords(r)}
    lines = [format_vector(r)] + [f"  {name:>12}  {c}" for name, c in obj["coordinates"].items()]
    _emit(args, obj, "\n".join(lines))
    return OK


def cmd_spectrum(args) -> int:
    from .expr import evaluate, format_vector, parse
    from .lie import eigen_decomposition

    node = parse(args.element)
    cands = parse_candidates(args.candidates)
    alg = _algebra(args, args.pair)
    h = evaluate(node, alg)
    res = eigen_decomposition(alg.structure_table(), h.c, cands)
    dims = {_fmt(p.value): p.dim for p in sorted(res.pieces, key=lambda p: p.value) if p.dim}
    obj = {"pair": args.pair, "element": format_vector(h), "eigenspaces": dims, "unaccounted": res.residual}
    lines = [f"ad({format_vector(h)})"] + [f"  {v:>6}: {d}" for v, d in dims.items()]
    lines.append(f"  outside candidates: {res.residual}")
    _emit(args, obj, "\n".join(lines))
    return OK


def cmd_export(args) -> int:
    table = _algebra(args, args.pair).structure_table()
    out = Path(args.out)
    if args.format == "json":
        out.write_text(table.to_json(), encoding="utf-8")
    else:
        out.write_text(table.to_csv(), encoding="utf-8")
    obj = {"pair": args.pair, "format": args.format, "path": str(out), "nonzero_brackets": len(table),
           "sha256": table.content_hash()}
    _emit(args, obj, f"wrote {len(table)} brackets to {out}")
    return OK


COMMANDS = {"tables": cmd_tables, "build": cmd_build, "verify": cmd_verify, "bracket": cmd_bracket,
            "spectrum": cmd_spectrum, "export": cmd_export}


def _error(as_json: bool, kind: str, message: str, **extra) -> None:
    if as_json:
        print(json.dumps({"error": kind, "message": message, **extra}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)


def main(argv=None) -> int:
    from .expr import ExprSyntaxError

    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    try:
        args = _build_parser().parse_args(argv)
        args.cache = args.sub_cache or args.cache
        args.json = args.json or args.sub_json
        return COMMANDS[args.command](args)
    except UsageError as exc:
        _error(as_json, "usage", str(exc))
        return USAGE
    except ExprSyntaxError as exc:
        _error(as_json, "syntax", str(exc), offset=exc.offset, expected=list(exc.expected))
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
