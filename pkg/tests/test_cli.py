import json
import subprocess
import sys

import pytest

from exceptional.cli import main, parse_candidates
from exceptional.lie import StructureTable


@pytest.fixture
def run(cache_dir, capsys):
    def _run(*argv):
        code = main(["--cache", str(cache_dir), *argv])
        out, err = capsys.readouterr()
        return code, out, err
    return _run


def test_candidates():
    assert parse_candidates("0,±2,±4") == [0, 2, -2, 4, -4]
    assert parse_candidates("+-1, 3/2") == [1, -1, 1.5]


def test_tables_check(run):
    code, out, _ = run("tables", "--algebra", "O'", "--check")
    assert code == 0 and "all 49 entries match" in out
    code, out, _ = run("--json", "tables", "--algebra", "O", "--check")
    obj = json.loads(out)
    assert code == 1 and len(obj["check"]["mismatches"]) == 2


def test_bracket_command(run):
    code, out, _ = run("--json", "bracket", "--lhs", "X[1*i]", "--rhs", "X[1*j]")
    obj = json.loads(out)
    assert code == 0
    assert obj["coordinates"] == {"S[k]": "2/3", "G[k]": "-1/3", "A[k]": "-1"}


def test_spectrum_command(run):
    code, out, _ = run("--json", "spectrum", "--element", "A[L]", "--candidates", "0,±2,±4")
    obj = json.loads(out)
    assert code == 0 and obj["eigenspaces"] == {"-4": 1, "-2": 56, "0": 134, "2": 56, "4": 1}
    assert obj["unaccounted"] == 0


def test_verify_killing(run, tmp_path):
    out_file = tmp_path / "rep.json"
    code, out, _ = run("verify", "--suite", "killing", "--pair", "O:O", "--out", str(out_file))
    rep = json.loads(out_file.read_text())
    assert code == 0
    assert rep["checks"][0]["detail"]["signature"] == [0, 248, 0]
    assert set(rep) == {"suite", "pair", "checks", "summary"}


def test_verify_lemma1(run):
    code, out, _ = run("--json", "verify", "--suite", "lemma1")
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["failed"] == 0
    ids = [c["id"] for c in rep["checks"]]
    assert ids == sorted(ids)


def test_verify_tables_fails_on_reference_table(run):
    code, _, _ = run("verify", "--suite", "tables")
    assert code == 1


def test_usage_errors(run):
    code, _, err = run("--json", "verify", "--suite", "decomp", "--pair", "O:O")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run("verify", "--suite", "bogus")
    assert code == 2 and "invalid choice" in err
    code, _, _ = run()
    assert code == 2


def test_parse_error_json(run):
    code, _, err = run("--json", "bracket", "--lhs", "X[Q*i]", "--rhs", "X[1*i]")
    obj = json.loads(err)
    assert code == 2 and obj["offset"] == 2 and "K" in obj["expected"]


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_export(run, tmp_path, table, fmt):
    out = tmp_path / f"sc.{fmt}"
    code, _, _ = run("export", "--what", "sc", "--format", fmt, "--out", str(out))
    assert code == 0
    if fmt == "json":
        assert StructureTable.load(out).content_hash() == table.content_hash()
    else:
        assert out.read_text().startswith("i,j,k,c,")


def test_module_entry_point(cache_dir):
    r = subprocess.run([sys.executable, "-m", "exceptional", "--cache", str(cache_dir), "build", "--pair", "O':O"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "source: cache" in r.stdout
