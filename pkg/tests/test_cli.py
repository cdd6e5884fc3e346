import subprocess
import sys

import pytest

from congruent.cli import run
from congruent.table_io import emit_table, parse_table
from conftest import DATA, glitch_record, table1_tables

FIRST_COLUMN = "5 6 7 13 14 15 21 22 23 29 30 31 34 37 38 39 41 46 47".split()


def test_tunnell(capsys):
    assert run(["tunnell", "--range", "1", "50"]) == 0
    assert capsys.readouterr().out.split() == FIRST_COLUMN


@pytest.mark.parametrize("argv, out", [
    (["pq", "decode", "--n", "5", "--p", "5", "--q", "4"], "3/2 20/3\n"),
    (["pq", "encode", "--n", "21", "--alpha", "7/2", "--beta", "12"], "4 3\n"),
    (["pq", "compress", "--n", "53", "--p", "1873180325", "--q", "1158313156"], "53 5945 1 34034\n"),
    (["curve", "double", "--n", "5", "--x", "-4", "--y", "6"], "1681/144 -62279/1728\ntau 12\n"),
    (["curve", "mul", "--n", "5", "--x", "-4", "--y", "6", "--k", "0"], "O\n"),
    (["curve", "sides", "--n", "5", "--x", "-4", "--y", "6"], "3/2 20/3\n"),
])
def test_commands(capsys, argv, out):
    assert run(argv) == 0
    assert capsys.readouterr().out == out


def test_curve_halve(capsys):
    assert run(["curve", "halve", "--n", "5", "--x", "1681/144", "--y=-62279/1728"]) == 0
    assert "-4 6" in capsys.readouterr().out.splitlines()


def test_search_then_validate(tmp_path, capsys):
    out = tmp_path / "table.csv"
    assert run(["search", "--bound", "600", "--out", str(out)]) == 0
    assert run(["validate", str(out)]) == 0
    rows = parse_table(out.read_text())
    assert {r.n for r in rows} >= {5, 6, 7, 14, 15, 21, 22, 30, 34, 39, 41, 46}


def test_search_partitions(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["search", "--bound", "200", "--n-max", "500", "--out", str(a)]) == 0
    assert run(["search", "--bound", "200", "--n-max", "500", "--partitions", "3", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()


def test_validate_reports_failures(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text(emit_table([glitch_record()]))
    assert run(["validate", str(bad)]) == 1
    assert "pq_opposite_parity" in capsys.readouterr().out


def test_validate_golden():
    assert run(["validate", str(DATA / "first_rows.csv")]) == 0


def test_diff(tmp_path, capsys):
    old, new = table1_tables()
    (tmp_path / "old.csv").write_text(emit_table(old))
    (tmp_path / "new.csv").write_text(emit_table(new))
    assert run(["diff", str(tmp_path / "old.csv"), str(tmp_path / "new.csv")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert lines[2] == "330\t60\t55\timproved"


def test_plot(capsys):
    assert run(["plot", str(DATA / "first_rows.csv")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "5\t1.301030" and out[-1] == "47\t7.993832"


def test_select(tmp_path, capsys):
    gens = tmp_path / "gens.txt"
    gens.write_text("5 -4 6\n6 12 36\n")
    assert run(["select", "--gens", str(gens)]) == 0
    rows = parse_table(capsys.readouterr().out)
    assert [(r.n, r.height) for r in rows] == [(5, 20), (6, 4)]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["pq", "decode", "--n", "5"],
    ["pq", "decode", "--n", "5", "--p", "3", "--q", "2"],
    ["curve", "double", "--n", "5", "--x", "1", "--y", "1"],
    ["pq", "encode", "--n", "5"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_format_error(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("n,P\n1,2\n")
    assert run(["validate", str(bad)]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "congruent", "pq", "decode", "--n", "6", "--p", "2", "--q", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3 4\n"
