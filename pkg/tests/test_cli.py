import json
import subprocess
import sys

import pytest

from bmkit import core
from bmkit.arith import parse_rational
from bmkit.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_table_tsv(capsys):
    code, out, _ = run(capsys, "table", "--m", "2", "--kind", "d", "--format", "tsv")
    assert code == 0
    assert out == "0\t21/8\n1\t15/4\n2\t3/2\n"


def test_table_defaults(capsys):
    assert run(capsys, "table", "--m", "0", "--kind", "d")[:2] == (0, "0\t1\n")
    assert run(capsys, "table", "--m", "0")[:2] == (0, "0\t1\n")


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--m", "1", "--kind", "D", "--format", "json")
    assert code == 0
    assert out.strip() == '{"m":1,"kind":"D","values":["3","2"]}'


def test_table_range_json_round_trips(capsys):
    code, out, _ = run(capsys, "table", "--m", "0..6", "--format", "json")
    tables = [core.CoefficientTable.from_json(line) for line in out.splitlines()]
    assert [t.m for t in tables] == list(range(7))
    assert tables == [core.d_coeffs(m) for m in range(7)]


def test_table_range_tsv(capsys):
    _, out, _ = run(capsys, "table", "--m", "1..2", "--kind", "D")
    assert out == "# m=1\n0\t3\n1\t2\n# m=2\n0\t63\n1\t60\n2\t24\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "--m", "3..1"),
        ("table", "--m", "-1"),
        ("table", "--m", "x"),
        ("table", "--m", "1", "--kind", "q"),
        ("verify", "--m", "2", "--checks", "bogus"),
        ("integral", "--m", "0", "--a", "-1.5"),
        ("integral", "--m", "0", "--a", "-1"),
        ("integral", "--m", "0", "--a", "abc"),
        ("integral", "--m", "0", "--a", "1", "--tol", "0"),
        ("oracle", "--m", "9"),
        ("oracle", "--m", "0"),
        (),
    ],
)
def test_invalid_arguments_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_verify_sweep_passes(capsys):
    code, out, err = run(capsys, "verify", "--m", "2..50", "--checks", "recurrence,logconcavity,unimodality")
    assert code == 0
    assert "passed" in err
    rows = out.splitlines()[1:]
    assert rows and all(r.split("\t")[6] == "true" for r in rows)


def test_verify_a1(capsys):
    code, out, _ = run(capsys, "verify", "--m", "0..100", "--checks", "a1", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 202
    for r in rows:
        assert parse_rational(r["observed"]) == parse_rational(r["expected"])


def test_verify_section4_report(capsys):
    code, out, _ = run(capsys, "verify", "--m", "2..2", "--checks", "section4", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    assert (row["observed"], row["relation"], row["expected"], row["pass"]) == ("12096", "<", "21600", True)
    assert (row["m"], row["i"]) == (2, 1)


def test_verify_default_checks_cover_everything(capsys):
    code, out, _ = run(capsys, "verify", "--m", "0..6", "--format", "json")
    assert code == 0
    names = {r["check"].split("@")[0] for r in json.loads(out)}
    assert {"d-expansion", "d-recurrence", "D-recurrence", "log-concavity", "unimodality",
            "a1-identity", "section4", "P-double"} <= names


def test_verify_failure_exit_1_with_witness(capsys, monkeypatch):
    from bmkit import verify

    monkeypatch.setattr(verify.core, "ineq_section4", lambda m, i: (5, 5))
    code, out, err = run(capsys, "verify", "--m", "2..3", "--checks", "section4", "--format", "json")
    assert code == 1
    rows = json.loads(out)
    assert all(not r["pass"] and "m=" in r["witness"] and "i=" in r["witness"] for r in rows)
    assert "FAIL" in err


def test_oracle_m1(capsys):
    code, out, _ = run(capsys, "oracle", "--m", "1", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert all(r["pass"] for r in rows)
    assert [r["observed"] for r in rows if r["check"] == "weight-D"] == ["3", "2"]


def test_oracle_m3(capsys):
    code, out, _ = run(capsys, "oracle", "--m", "3")
    assert code == 0


def test_oracle_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("BMKIT_ORACLE_MAX_M", "1")
    code, _, err = run(capsys, "oracle", "--m", "2")
    assert code == 2 and "BMKIT_ORACLE_MAX_M" in err


@pytest.mark.parametrize("m, a, expected", [("0", "1", "0.785398163"), ("1", "1", "0.490873852")])
def test_integral(capsys, m, a, expected):
    code, out, _ = run(capsys, "integral", "--m", m, "--a", a, "--tol", "1e-8", "--format", "json")
    assert code == 0
    row = json.loads(out)
    assert row["closed_form"].startswith(expected)
    assert row["numeric"].startswith(expected)
    assert float(row["abs_err"]) <= 1e-8
    assert len(row["closed_form"].replace(".", "").lstrip("0")) <= 12


def test_integral_rational_a_and_tsv(capsys):
    code, out, _ = run(capsys, "integral", "--m", "2", "--a", "1/2")
    header, row = out.splitlines()
    assert header.split("\t") == ["m", "a", "numeric", "closed_form", "abs_err", "tol", "pass"]
    assert row.split("\t")[1] == "1/2" and row.endswith("true")


def test_integral_tolerance_failure(capsys):
    code, _, err = run(capsys, "integral", "--m", "3", "--a", "1", "--tol", "1e-300")
    assert code == 1
    assert err


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "bmkit", "verify", "--m", "0..8", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
