import json
import subprocess
import sys

import pytest

from conjlang.automata import Alphabet, equivalent
from conjlang.benois import RationalSubset
from conjlang.cli import run
from conjlang.growth import relative_growth
from conjlang.textio import parse_automaton


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reduce(capsys):
    assert call(capsys, "reduce", "abB") == (0, "a\n", "")
    assert call(capsys, "reduce", "--cyclic", "Aba")[1] == "b\ta\n"


def test_conjtest(capsys):
    assert call(capsys, "conjtest", "ab", "ba")[:2] == (0, "yes\ta\n")
    assert call(capsys, "conjtest", "a", "A")[:2] == (1, "no\n")


def test_gcp_exit_codes(capsys):
    assert call(capsys, "gcp", "--g", "Aba", "--u", "b", "--v", "a*")[0] == 0
    assert call(capsys, "gcp", "--g", "Aba", "--u", "b", "--v", "b*")[0] == 1
    code, out, _ = call(capsys, "gcp", "--g", "ab", "--u", "ba", "--witness")
    assert code == 0 and out == "yes\nu = ba\nv = A\n"
    assert call(capsys, "doublegcp", "--u", "aa", "--v", "(ab)+")[0] == 1
    assert call(capsys, "doublegcp", "--u", "ab", "--v", "ba")[0] == 0


def test_growth_tsv(capsys):
    code, out, _ = call(capsys, "growth", "--u", "(ab)*", "--max", "6", "--tsv")
    rows = [tuple(map(int, line.split("\t"))) for line in out.splitlines()]
    assert code == 0 and len(rows) == 6
    table = relative_growth(RationalSubset.from_regex("(ab)*", Alphabet(2)), 6)
    assert rows == list(table.rows())[1:]
    assert all(a[2] <= b[2] for a, b in zip(rows, rows[1:]))


def test_benois_and_conjgeo_dumps_round_trip(capsys, tmp_path):
    out = call(capsys, "benois", "--regex", "(abA)*", "--enum", "5")[1]
    assert out.split() == ["1", "abA", "abbA", "abbbA"]
    out = call(capsys, "conjgeo", "--u", "(ab)+", "--v", "a")[1]
    path = tmp_path / "geo.aut"
    path.write_text(out)
    a = Alphabet(2)
    expected = parse_automaton(out, a)
    assert call(capsys, "conjgeo", "--u", "(ab)+", "--v", "a")[1] == out
    # the dumped (ba)+ read back as U: its unconstrained conjugates
    assert call(capsys, "conjgeo", "--u", str(path), "--enum", "4")[1].split() == ["ab", "ba", "abab", "baba"]
    assert call(capsys, "benois", "--automaton", str(path), "--enum", "4")[1].split() == ["ba", "baba"]
    assert equivalent(parse_automaton(call(capsys, "benois", "--automaton", str(path))[1], a), expected)


def test_conjgeo_methods(capsys):
    out = call(capsys, "conjgeo", "--u", "(ab)+", "--v", "a", "--method", "reduced-pair", "--enum", "4")[1]
    assert out.split() == ["ba", "baba"]
    code, _, err = call(capsys, "conjgeo", "--u", "ab", "--v", "B|a", "--method", "reduced-pair")
    assert code == 2 and "cancels" in err
    assert call(capsys, "conjsl", "--u", "ab|ba|b", "--max", "3")[1].split() == ["b", "ab"]


def test_rank_inference_and_override(capsys):
    assert call(capsys, "conjsl", "--u", "c", "--max", "1")[1].split() == ["c"]
    code, _, err = call(capsys, "reduce", "--rank", "1", "ab")
    assert code == 2 and "outside" in err


def test_errors(capsys, tmp_path):
    code, _, err = call(capsys, "benois", "--regex", "a(")
    assert code == 2 and "position" in err
    bad = tmp_path / "bad.aut"
    bad.write_text("states: 1\ninitial: 0\ntrans: 0 a 4\n")
    code, _, err = call(capsys, "benois", "--automaton", str(bad))
    assert code == 2 and "line 3" in err
    assert call(capsys, "nosuch")[0] == 2
    assert call(capsys, "benois", "--regex", "a", "--automaton", str(bad))[0] == 2


def test_ud(capsys):
    code, out, _ = call(capsys, "ud", "--degree", "1", "--max", "12", "--window", "4", "12")
    assert code == 0 and out.startswith("degree 1 window [4,12] slope ")


def test_va(capsys, tmp_path):
    subset = tmp_path / "u.json"
    subset.write_text(json.dumps({"components": [{"coset": "flip", "linear": [{"base": [1]}]}]}))
    code, out, _ = call(capsys, "va", "alpha", "--group", "dinf", "--subset", str(subset), "--box", "3")
    lines = out.splitlines()
    assert code == 0 and lines[-4:] == ["flip\t-3", "flip\t-1", "flip\t1", "flip\t3"]
    group = tmp_path / "g.json"
    group.write_text("{not json")
    assert call(capsys, "va", "alpha", "--group", str(group), "--subset", str(subset))[0] == 2


def test_help_documents_formats(capsys):
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    assert "trans: 0 a 1" in out and "coset_product" in out


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "conjlang.cli", "conjgeo", "--u", "(ab|B)*a", "--enum", "5"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first
