import json
import subprocess
import sys

import pytest

from ivgamma import signed_permutations as sp
from ivgamma.cli import EXIT_FAIL, EXIT_GUARD, EXIT_OK, EXIT_USAGE, run


def _json(capsys, argv, code=EXIT_OK):
    assert run(argv) == code
    return json.loads(capsys.readouterr().out)


def test_eulerian_gamma(capsys):
    out = _json(capsys, ["eulerian", "--n", "6", "--j", "1", "--gamma"])
    assert out["gamma"]["entries"] == ["1", "232", "976"]
    assert out["ref_degree"] == 5


def test_eulerian_class_polys_csv(capsys):
    assert run(["eulerian", "--n", "3", "--format", "csv"]) == EXIT_OK
    text = capsys.readouterr().out
    assert "B,1 23 23 1" in text


def test_table_csv(capsys):
    assert run(["table", "--n", "3", "--stat", "bpp", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["k,count", "0,1", "1,10", "2,1", "3,0"]


def test_subdivide(capsys, tmp_path):
    out = _json(capsys, ["subdivide", "--generator", "simplex-boundary", "--n", "3"])
    assert out["f_vector"] == [1, 12, 12]
    cx = tmp_path / "edge.json"
    cx.write_text(json.dumps({"vertices": [1, 2], "facets": [[0, 1]]}))
    out = _json(capsys, ["subdivide", "--input", str(cx)])
    assert out["f_vector"] == [1, 5, 4]


def test_gamma_int(capsys):
    out = _json(capsys, ["gamma-int", "--h", "1,3,3,1"])
    assert out["gamma"]["entries"] == ["1", "92"]


def test_gamma_int_cross_check(capsys, tmp_path):
    cx = tmp_path / "c.json"
    cx.write_text(json.dumps({"vertices": ["a", "b", "c"], "facets": [[0, 1], [1, 2], [0, 2]]}))
    out = _json(capsys, ["gamma-int", "--input", str(cx), "--cross-check"])
    assert out["cross_check"]["agrees"] is True


def test_local_h(capsys):
    out = _json(capsys, ["local-h", "--n", "3"])
    assert out["routes_agree"]
    assert {r["route"] for r in out["results"]} == {"definition", "derangement", "excedance"}


def test_ffk_and_dec(capsys):
    assert _json(capsys, ["ffk", "--f", "1,8", "--k", "1"])["ok"] is True
    assert _json(capsys, ["ffk", "--f", "1,2,4", "--k", "2"])["ok"] is False
    out = _json(capsys, ["dec", "--n", "5", "--check-balanced"])
    assert out["matches_gamma"] and out["balanced"]


def test_usage_errors(capsys):
    assert run([]) == EXIT_USAGE
    assert run(["eulerian", "--n", "3", "--j", "9"]) == EXIT_USAGE
    assert run(["verify", "--suite", "nonsense"]) == EXIT_USAGE
    assert run(["subdivide", "--generator", "simplex"]) == EXIT_USAGE
    assert run(["gamma-int", "--h", "1,2,3"]) == EXIT_USAGE
    assert run(["subdivide", "--input", "/nonexistent.json"]) == EXIT_USAGE
    capsys.readouterr()


def test_guard_exit_codes(capsys):
    assert run(["table", "--n", "9"]) == EXIT_GUARD
    assert run(["verify", "--max-n", "9"]) == EXIT_GUARD
    assert run(["subdivide", "--generator", "simplex", "--n", "6", "--max-dim", "3"]) == EXIT_GUARD
    err = capsys.readouterr().err
    assert "--allow-n9" in err
    assert sp.LIMITS["max_n"] == sp.DEFAULT_MAX_N


def test_local_h_guard(capsys):
    assert run(["local-h", "--n", "6", "--route", "definition"]) == EXIT_GUARD
    capsys.readouterr()


def test_verify_subset_and_errata(capsys, tmp_path):
    report = tmp_path / "r.json"
    assert run(["verify", "--suite", "first-letter", "--max-n", "7", "--report", str(report)]) == EXIT_OK
    data = json.loads(report.read_text())
    corrected = [r for r in data["records"] if r["status"] == "corrected-form-passes"]
    assert len(corrected) == 1
    assert {k: corrected[0]["witness"][k] for k in ("n", "s", "r")} == {"n": 2, "s": 1, "r": 1}
    out = _json(capsys, ["verify", "--suite", "first-letter,gamma-tables", "--errata-only"])
    assert out["records"] and all(r["status"] == "corrected-form-passes" for r in out["records"])
    assert any(r["witness"].get("printed") == [0, 192, 152] for r in out["records"])


def test_verify_transforms(capsys):
    out = _json(capsys, ["verify", "--suite", "transforms", "--max-dim", "3"])
    assert out["summary"]["fail"] == 0


def test_verify_failure_exit(monkeypatch, capsys):
    from ivgamma import suites
    from ivgamma.report import check
    monkeypatch.setitem(suites.SUITES, "boundary", lambda o: [check("boundary", "x", "y", {}, False, {"w": 1})])
    assert run(["verify", "--suite", "boundary"]) == EXIT_FAIL
    capsys.readouterr()


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--suite", "slides,d5-matrix,gamma-int", "--max-n", "6", "--seed", "3"]
    assert run(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out == first
    assert run(argv + ["--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("suite,identity,locus")


def test_threads_do_not_change_output(capsys):
    argv = ["table", "--n", "6", "--stat", "slides"]
    sp._TABLES.pop(6, None)
    assert run(argv + ["--threads", "2"]) == EXIT_OK
    parallel = capsys.readouterr().out
    sp._TABLES.pop(6, None)
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out == parallel


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ivgamma.cli", "eulerian", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["B"] == ["1", "6", "1"]


@pytest.mark.parametrize("argv", [["--version"], ["verify", "--help"]])
def test_help_and_version(argv, capsys):
    assert run(argv) == EXIT_OK
    capsys.readouterr()
