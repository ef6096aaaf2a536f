import io
import json
import shutil
import subprocess
from pathlib import Path

import pytest

from vanish.cli import EXIT_EMPTY, EXIT_INPUT, EXIT_OK, EXIT_ORIGIN, EXIT_VERIFY, main

F5 = Path(__file__).resolve().parent.parent / "data" / "f5_example.spec"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def make(text, name="p.spec"):
        path = tmp_path / name
        path.write_text(text)
        return path

    return make


def test_ideal_f5():
    code, text = run("ideal", F5)
    assert code == EXIT_OK
    assert "status: Proper" in text and text.rstrip().endswith("degree: 19")
    assert "  t1^5*t2 + 4*t1*t2^5" in text


def test_ideal_two_points(write):
    code, text = run("ideal", write("q = 2\nvars = y1\nf1 = y1\nf2 = y1+1\n"))
    assert code == EXIT_OK and "\n  t1*t2\n" in text


def test_empty_set_exit(write):
    code, text = run("ideal", write("q = 2\nvars = y1\nf1 = y1 ; g1 = y1^2 - y1\nf2 = 1\n"))
    assert code == EXIT_EMPTY and "empty" in text


def test_origin_only_exit(write):
    spec = write("q = 2\nvars = y1, y2\nf1 = y1^2 - y1\nf2 = 0\nmode = affine\n")
    code, text = run("ideal", spec)
    assert code == EXIT_ORIGIN and "origin" in text


def test_input_errors(write, capsys):
    assert run("ideal", write("q = 4\nvars = y1\nf1 = y1\n"))[0] == EXIT_INPUT
    assert "not a prime" in capsys.readouterr().err
    assert run("ideal", write("q = 5\nvars = y1\nf1 = y1 +\n"))[0] == EXIT_INPUT
    assert "line 3" in capsys.readouterr().err
    assert run("ideal", "/nonexistent/file.spec")[0] == EXIT_INPUT


def test_invariants_f5():
    code, text = run("invariants", F5)
    assert code == EXIT_OK and "dim 1, degree 19, reg 5" in text
    code, text = run("invariants", F5, "--mode", "projective_algebraic")
    assert code == EXIT_OK and "dim 1, degree 6, reg 2" in text


def test_invariants_constant(write):
    code, text = run("invariants", write("q = 3\nvars = y1\nf1 = 1\nf2 = 2\n"))
    assert code == EXIT_OK and "degree 1, reg 0" in text


def test_code_table_f5():
    code, text = run("code", F5, "--dmin", 1, "--dmax", 5)
    assert code == EXIT_OK
    lines = dict(line.split(" | ", 1) for line in text.splitlines())
    cells = {k.strip(): [c.strip() for c in v.split("|")] for k, v in lines.items()}
    assert cells["dim C_XX(d)"] == ["3", "6", "10", "15", "19"]
    assert cells["delta_XX(d)"] == ["13", "8", "4", "-", "1"]
    assert cells["|XX|"] == ["19"] * 5


def test_code_table_algebraic():
    code, text = run("code", F5, "--mode", "projective_algebraic", "--dmax", 2, "--format", "json-lines")
    rows = [json.loads(line) for line in text.splitlines()]
    assert code == EXIT_OK
    assert [(r["length"], r["dimension"], r["min_distance"]) for r in rows] == [(6, 3, 3), (6, 6, 1)]


def test_code_not_computed_json():
    code, text = run("code", F5, "--dmin", 4, "--dmax", 4, "--format", "json-lines")
    (row,) = [json.loads(line) for line in text.splitlines()]
    assert row["min_distance"] is None and "7629394531" in row["note"]


def test_code_usage_errors(capsys):
    assert run("code", F5, "--dmin", 3, "--dmax", 2)[0] == EXIT_INPUT
    assert "larger than" in capsys.readouterr().err
    assert run("code", F5, "--mode", "affine")[0] == EXIT_INPUT


def test_points():
    code, text = run("points", F5, "--mode", "projective_algebraic")
    assert code == EXIT_OK and text.startswith("X: 6 points") and "  [1:4:4]" in text


def test_json_lines_ideal():
    code, text = run("ideal", F5, "--format", "json-lines")
    (rec,) = [json.loads(line) for line in text.splitlines()]
    assert rec["status"] == "Proper" and rec["degree"] == 19 and len(rec["generators"]) == 6


def test_verify_f5():
    code, text = run("verify", F5)
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_verify_monomial_parameterization(write):
    spec = write("q = 3\nvars = y1, y2\nf1 = y1^2 ; g1 = y2\nf2 = y2\nf3 = 1 ; g3 = y1\n")
    code, text = run("verify", spec)
    assert code == EXIT_OK and "PASS    reduced GB is binomial  (yes)" in text


def test_verify_identity_parameterization(write):
    code, text = run("verify", write("q = 3\nvars = y1, y2\nf1 = y1\nf2 = y2\n"))
    assert code == EXIT_OK and "PASS    I(XX*) = ({t_i^q - t_i}) match" in text


def test_verify_skips_over_oracle_cap():
    code, text = run("verify", F5, "--oracle-cap", 5)
    assert code == EXIT_OK and "SKIPPED oracle I(XX)  (19 points > 5)" in text


def test_verify_failure_exit(monkeypatch):
    import vanish.cli as cli

    monkeypatch.setattr(cli, "ideal_equal", lambda a, b: False)
    code, text = run("verify", F5)
    assert code == EXIT_VERIFY and "FAIL" in text


@pytest.mark.parametrize("argv", [("ideal",), ("invariants",), ("code", "--dmax", "3"), ("points",), ("verify",)])
def test_output_is_byte_identical(argv):
    first = run(argv[0], F5, *argv[1:])
    assert run(argv[0], F5, *argv[1:]) == first


@pytest.mark.skipif(shutil.which("vanish") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["vanish", "invariants", str(F5)], capture_output=True, text=True)
    assert proc.returncode == 0 and "dim 1, degree 19, reg 5" in proc.stdout
