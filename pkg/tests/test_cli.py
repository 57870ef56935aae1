import csv
import io
import json
import subprocess
import sys

import pytest

from qsf import jacobi_type as jt
from qsf.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_bessel(capsys):
    code, out, _ = call(capsys, "eval", "--family", "bessel", "--solution", "J", "--lambda", "1", "--M", "1",
                        "--x", "0.5")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["family", "solution", "lambda", "M", "x", "value", "abs_err"]
    assert len(rows) == 2
    assert float(rows[1][5]) == pytest.approx(0.93081880137614215, rel=1e-12)


def test_roots_json(capsys):
    code, out, _ = call(capsys, "roots", "--alpha", "0.5", "--A", "1", "--lambda", "2", "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "roots"
    assert "xi" in doc
    assert len(doc["results"]) == 4
    for r in doc["results"]:
        z = complex(r["re"], r["im"])
        assert abs(jt.quartic(z, 0.5, 1.0, 2.0)) < 1e-9


def test_bad_M_exit_2(capsys):
    code, _, err = call(capsys, "eval", "--family", "bessel", "--solution", "J", "--lambda", "1", "--M", "-1",
                        "--x", "0.5")
    assert code == 2
    assert "M must be > 0" in err


@pytest.mark.parametrize("argv", [
    ["eval", "--family", "bessel", "--solution", "J", "--lambda", "1", "--M", "1", "--x", "0.5", "--bogus"],
    ["eval", "--family", "bessel", "--solution", "J", "--lambda", "1", "--A", "1", "--x", "0.5"],
    ["eval", "--family", "laguerre", "--solution", "1", "--lambda", "1", "--M", "1", "--x", "0.5"],
    ["frobnicate"],
    ["suite", "--only", "11"],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_domain_error_exit_2(capsys):
    code, _, err = call(capsys, "eval", "--family", "legendre", "--solution", "1", "--lambda", "1", "--A", "1",
                        "--x", "1.5")
    assert code == 2 and "DomainError" in err


def test_residual_passes(capsys):
    code, out, _ = call(capsys, "residual", "--family", "laguerre", "--lambda", "1", "--A", "1", "--x-min", "0.5",
                        "--x-max", "5", "--n-points", "4", "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"] == {"total": 4 * 2 * 4, "failed": 0}


def test_residual_failure_exit_1(capsys):
    code, out, _ = call(capsys, "residual", "--family", "bessel", "--solution", "J", "--lambda", "1", "--M", "1",
                        "--x-min", "1", "--x-max", "2", "--n-points", "3", "--tol", "1e-20")
    assert code == 1
    assert "False" in out or "false" in out


def test_wronskian_commands(capsys):
    code, out, _ = call(capsys, "wronskian", "--family", "bessel", "--lambda", "1", "--M", "1", "--x", "1")
    assert code == 0
    code, _, err = call(capsys, "wronskian", "--family", "legendre", "--lambda", "1", "--A", "1", "--x", "0.2")
    assert code == 2 and "no real basis" in err
    code, out, _ = call(capsys, "wronskian", "--family", "laguerre", "--lambda", "0", "--A", "1", "--x", "1",
                        "--output", "json")
    assert code == 1
    assert "L_4 ~ L_2" in json.loads(out)["results"][0]["degenerate"]


def test_ortho(capsys):
    code, out, _ = call(capsys, "ortho", "--alpha", "0.5", "--A", "1", "--max-n", "3", "--output", "json")
    assert code == 0
    assert json.loads(out)["summary"]["failed"] == 0


def test_table_rows(capsys):
    code, out, _ = call(capsys, "table", "--family", "jacobi", "--solution", "S1", "--alpha", "0", "--A", "1",
                        "--n", "2", "--x-min", "-0.5", "--x-max", "0.5", "--n-points", "5")
    assert code == 0
    assert len(out.strip().splitlines()) == 6


def test_suite_subset(capsys):
    code, out, _ = call(capsys, "suite", "--only", "2,5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("[PASS] criterion 2")
    assert lines[1].startswith("[PASS] criterion 5")


def test_byte_identical_output():
    argv = [sys.executable, "-m", "qsf", "table", "--family", "legendre", "--lambda", "1", "--A", "1",
            "--solution", "1", "--x-min", "-0.8", "--x-max", "0.8", "--n-points", "7"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    value = a.decode().splitlines()[1].split(",")[-2]
    assert len(value.replace("-", "").replace(".", "").split("e")[0].lstrip("0")) <= 17
