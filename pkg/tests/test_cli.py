import csv
import io
import json
import subprocess
import sys

import pytest

from qhecke.cli import main, table_rows
from qhecke.identities.registry import REGISTRY, IdentitySpec, VerifyReport
from qhecke.series import QSeries


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "thm1.1-even", "--order", "1")
    assert code == 0
    assert out.startswith("MATCH") and "thm1.1-even" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "cor-even", "--order", "40", "--json")
    assert code == 0
    r = VerifyReport.from_json(out.strip())
    assert r.identity == "cor-even" and r.status == "match" and r.order == 40


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--order", "100", "--json", "--ordered")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == len(REGISTRY) == 21
    reports = [VerifyReport.from_json(line) for line in lines]
    assert [r.identity for r in reports] == list(REGISTRY)
    assert all(r.ok for r in reports)


def test_verify_all_threads(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--order", "30", "--json", "--jobs", "4")
    names = sorted(json.loads(line)["identity"] for line in out.strip().splitlines())
    assert code == 0 and names == sorted(REGISTRY)


def test_verify_errors(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code != 0 and "bogus" in err
    code, _, err = run(capsys, "verify", "cor-even", "--order", "0")
    assert code != 0 and "positive" in err
    code, _, _ = run(capsys, "verify", "--order", "5")
    assert code != 0


def test_env_default_order(capsys, monkeypatch):
    monkeypatch.setenv("QHECKE_DEFAULT_ORDER", "17")
    code, out, _ = run(capsys, "verify", "cor-odd", "--json")
    assert code == 0 and json.loads(out)["order"] == 17
    monkeypatch.setenv("QHECKE_DEFAULT_ORDER", "-3")
    code, _, _ = run(capsys, "verify", "cor-odd")
    assert code != 0


def test_out_file(capsys, tmp_path):
    path = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "verify", "cor-odd", "--order", "20", "--json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["status"] == "match"


def test_table_DN(capsys):
    code, out, _ = run(capsys, "table", "DN", "--count", "7")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["N", "D_N"]
    assert [r[1] for r in rows[1:]] == ["1", "1", "0", "-q^-1", "-q^-2", "0", "q^-5"]


def test_table_S(capsys):
    code, out, _ = run(capsys, "table", "S", "--order", "4")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert code == 0
    assert [r[0] for r in rows] == ["0", "1", "2", "3", "4"]
    assert [r[1] for r in rows] == ["1", "0", "1", "-2", "1"]


def test_table_P1_sieve_columns(capsys):
    code, out, _ = run(capsys, "table", "P1", "--order", "2", "--format", "json")
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert code == 0 and len(rows) == 3
    for r in rows:
        assert int(r["even"]) + int(r["odd"]) == int(r["coefficient"])


@pytest.mark.parametrize("name", ["T", "U", "V", "gamma:3", "P1"])
def test_table_series_names(name):
    header, rows = table_rows(name, order=12)
    assert header == ["exponent", "coefficient", "even", "odd"]
    assert len(rows) == 13


def test_table_coefficients_are_exact_strings():
    _, rows = table_rows("gamma:0", order=10)
    assert [r[1] for r in rows] == ["1", "0", "1", "0", "0", "0", "0", "0", "0", "0", "-1"]


def test_table_errors(capsys):
    assert run(capsys, "table", "W", "--order", "3")[0] != 0
    assert run(capsys, "table", "gamma:x", "--order", "3")[0] != 0
    assert run(capsys, "table", "S", "--order", "0")[0] != 0
    assert run(capsys, "table", "S")[0] != 0


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) >= 19
    assert any(line.startswith("thm1.1-even\t") for line in lines)
    assert any(line.startswith("cor-i-vanish\t") for line in lines)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhecke", "verify", "bogus"], capture_output=True, text=True
    )
    assert proc.returncode != 0
    proc = subprocess.run(
        [sys.executable, "-m", "qhecke", "table", "DN", "--count", "3", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert [json.loads(x)["D_N"] for x in proc.stdout.splitlines()] == ["1", "1", "0"]


def test_mismatch_exit_code(capsys, monkeypatch):
    spec = IdentitySpec("always-off", "ZZ", "1 against 1 + q", lambda n: QSeries.one(),
                        lambda n: QSeries.from_dict({0: 1, 1: 1}))
    monkeypatch.setitem(REGISTRY, "always-off", spec)
    code, out, _ = run(capsys, "verify", "always-off", "--order", "5", "--json")
    r = VerifyReport.from_json(out)
    assert code == 1
    assert r.status == "mismatch" and r.first_mismatch == {"exponent": 1, "lhs": "0", "rhs": "1"}
