import csv
import io
import json
from math import comb
from pathlib import Path
import subprocess
import sys

import pytest

from nakayama import suite
from nakayama.cli import main
from nakayama.reference import FIVE_LINE_CARTAN, FIVE_LINE_COXETER

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_exit(capsys, *argv):
    """Like run, for argparse failures that raise SystemExit."""
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_five_vertex_line(capsys):
    code, out, _ = run(capsys, "analyze", "--kupisch", "linear:4,4,3,2,1")
    assert code == 0
    r = json.loads(out)
    assert r["cartan"] == [list(row) for row in FIVE_LINE_CARTAN.rows]
    assert r["coxeter"] == [list(row) for row in FIVE_LINE_COXETER.rows]
    assert r["coxeter_permutation"] == [5, 3, 4, 1, 2]
    assert set(r) >= {
        "algebra", "cartan", "coxeter", "coxeter_permutation", "ringel", "ar_permutation",
        "e", "del", "grade", "auslander_gorenstein", "auslander_regular", "methods_agreed",
    }


def test_analyze_quiver_file(capsys):
    code, out, _ = run(capsys, "analyze", "--quiver", str(DATA / "crossing_quiver.json"))
    assert code == 0
    r = json.loads(out)
    assert r["auslander_regular"] is True
    sigma = {1: 5, 2: 4, 3: 3, 4: 1, 5: 2}
    assert r["ar_permutation"] == [next(i for i, j in sigma.items() if j == v) for v in range(1, 6)]


def test_analyze_semisimple(capsys):
    code, out, _ = run(capsys, "analyze", "--kupisch", "linear:1")
    r = json.loads(out)
    assert code == 0
    assert r["coxeter_permutation"] == r["ringel"] == r["ar_permutation"] == [1]


def test_analyze_is_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        assert run(capsys, "analyze", "--kupisch", "cyclic:2,3,3", "--out", str(path))[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, "analyze", "--kupisch", "linear:2,1", "--format", "csv")
    assert code == 0
    (row,) = list(csv.DictReader(io.StringIO(out)))
    assert row["algebra"] == "linear:2,1"
    assert row["ar_permutation"] == "2;1"
    assert "cartan" not in row


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--kupisch", "linear:4,2,1"],
        ["analyze", "--kupisch", "linear:x"],
        ["analyze", "--quiver", "/no/such/file.json"],
        ["enumerate", "--cyclic", "-n", "1..3"],
        ["enumerate", "-n", "1..3", "--filter", "shiny"],
        ["verify", "-n", "1..3", "--checks", "nonsense"],
        ["verify"],
        ["enumerate", "-n", "1..3", "--loewy", "3"],
        ["verify", "-n", "1..2", "--format", "csv"],
        ["enumerate", "-n", "3", "--jobs", "0"],
    ],
)
def test_usage_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert "error" in err and out == ""


@pytest.mark.parametrize(
    "argv",
    [["frobnicate"], ["enumerate", "-n", "3..1"], ["enumerate", "-n", "a..b"], ["analyze"], []],
)
def test_argument_errors_exit_one(capsys, argv):
    assert run_exit(capsys, *argv)[0] == 1


def test_validation_message_has_position(capsys):
    _, _, err = run(capsys, "analyze", "--kupisch", "linear:4,2,1")
    assert "index 1" in err


def test_enumerate_counts_are_catalan(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "1..7")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == sum(comb(2 * (n - 1), n - 1) // n for n in range(1, 8))
    first = json.loads(lines[0])
    assert first["algebra"] == {"orientation": "linear", "kupisch": [1]}


def test_enumerate_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "5", "--filter", "auslander-regular")
    assert code == 0
    assert len(out.splitlines()) == 9
    assert all(json.loads(line)["auslander_regular"] for line in out.splitlines())


def test_enumerate_cyclic_rotation_flag(capsys):
    _, full, _ = run(capsys, "enumerate", "--cyclic", "-n", "3", "--loewy", "3")
    _, reps, _ = run(capsys, "enumerate", "--cyclic", "-n", "3", "--loewy", "3", "--up-to-rotation")
    assert 0 < len(reps.splitlines()) < len(full.splitlines())


def test_reports_identical_across_jobs(capsys, tmp_path):
    outs = []
    for jobs in ("1", "2", "3"):
        path = tmp_path / f"e{jobs}.jsonl"
        assert run(capsys, "enumerate", "-n", "1..7", "--jobs", jobs, "--out", str(path))[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] == outs[2]
    outs = []
    for jobs in ("1", "2"):
        path = tmp_path / f"v{jobs}.json"
        run(capsys, "verify", "--cyclic", "-n", "1..4", "--loewy", "4", "--jobs", jobs, "--out", str(path))
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_verify_linear(capsys):
    code, out, _ = run(capsys, "verify", "--linear", "-n", "1..7", "--checks", "h-eq-coxeter,del-eq-e,ar-threeway")
    assert code == 0
    r = json.loads(out)
    assert r["algebras"] == 1 + 1 + 2 + 5 + 14 + 42 + 132
    assert r["violations"] == []


def test_verify_cyclic(capsys):
    code, out, _ = run(capsys, "verify", "--cyclic", "-n", "1..4", "--loewy", "4", "--checks", "del-eq-e,ringel-eq-grade")
    assert code == 0
    assert json.loads(out)["violations"] == []


@pytest.mark.parametrize("jobs", ["1", "2"])
def test_corrupted_check_exits_two(capsys, monkeypatch, jobs):
    monkeypatch.setitem(suite.CHECKS, "del-eq-e", lambda a: [] if a.n < 3 else [f"{a.describe()} corrupted"])
    code, out, _ = run(capsys, "verify", "-n", "1..4", "--checks", "del-eq-e", "--jobs", jobs)
    assert code == 2
    r = json.loads(out)
    assert len(r["violations"]) == 2 + 5
    assert all(v["check"] == "del-eq-e" for v in r["violations"])


def test_corrupted_library_result_exits_two(capsys, monkeypatch):
    from nakayama import core

    real = core.NakayamaAlgebra.ringel_h
    monkeypatch.setattr(core.NakayamaAlgebra, "ringel_h", lambda self, j: 1 if j == 2 else real(self, j))
    code, out, _ = run(capsys, "verify", "-n", "3", "--checks", "h-eq-coxeter")
    assert code == 2
    assert json.loads(out)["violations"]


def test_verify_reference_examples(capsys):
    code, out, _ = run(capsys, "verify", "--reference-examples")
    assert code == 0
    r = json.loads(out)
    assert r["mismatches"] == 0 and all(c["ok"] for c in r["checks"])


def test_reference_mismatch_exits_two(capsys, monkeypatch):
    from nakayama import reference

    real = reference.reference_checks
    monkeypatch.setattr(
        reference, "reference_checks", lambda: [reference.ReferenceCheck("wrong", lambda: 1, 2)] + real()
    )
    code, out, _ = run(capsys, "verify", "--reference-examples")
    assert code == 2
    assert json.loads(out)["mismatches"] == 1


def test_count(capsys):
    code, out, _ = run(capsys, "count", "-n", "1..6", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["auslander_regular"]) for r in rows] == [1, 1, 2, 4, 9, 21]
    assert [int(r["algebras"]) for r in rows] == [1, 1, 2, 5, 14, 42]


def test_probe(capsys):
    code, out, _ = run(capsys, "probe", "--kupisch", "cyclic:2,2,3,2,3")
    assert code == 0
    r = json.loads(out)
    assert r["algebras_probed"] == 1 and r["flagged"] == 0
    code, out, _ = run(capsys, "probe", "--cyclic", "-n", "1..4", "--loewy", "4", "--format", "jsonl")
    assert code == 0
    r = json.loads(out)
    assert r["algebras_probed"] == len(r["findings"]) > 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nakayama", "analyze", "--kupisch", "linear:2,1", "--format", "jsonl"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["auslander_regular"] is True
