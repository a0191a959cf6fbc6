import json
import subprocess
import sys

import pytest

from grouplab.cli import main
from grouplab.groupfile import parse_fixture_file, parse_group_file


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_to_file(tmp_path, capsys):
    out = tmp_path / "d14.txt"
    code, _, _ = run(capsys, "construct", "--kind", "dihedral", "--param", "14", "--out", str(out))
    assert code == 0
    assert parse_group_file(out).order == 14


def test_construct_full_spec(capsys):
    code, out, _ = run(capsys, "construct", "--kind", "spec", "--param", "dihedral:14 x metacyclic:7,3,2")
    assert code == 0
    assert out.startswith("# grouplab-gens v1\ndegree ")


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:sg300_25", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 300
    assert data["p_cores"] == {"2": 1, "3": 1, "5": 25}
    assert data["class_sizes"] == {"1": 1, "6": 24, "15": 30, "25": 25, "30": 120, "50": 100}


def test_analyze_human(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:s4_a4_sylow2")
    assert code == 0
    assert "chief factor orders: [4, 3, 2]" in out
    assert "supersoluble   no" in out


def test_factorize(capsys):
    code, out, _ = run(capsys, "factorize", "builtin:s4_a4_sylow2", "--mutually-permutable", "--proper",
                       "--json")
    data = json.loads(out)
    assert code == 0
    assert {(f["a_order"], f["b_order"]) for f in data["factorizations"]} == {(12, 8)}


def test_verify_pass_and_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "A", "--p", "2", "--fixture", "builtin:s3_x_s3",
                       "--json")
    assert code == 0 and json.loads(out)["verdict"] == "PASS"
    code, out, _ = run(capsys, "verify", "--theorem", "A", "--p", "3", "--fixture", "builtin:alt5")
    assert code == 0 and "VACUOUS" in out and "gcd" in out


def test_verify_every_prime(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "B", "--fixture", "builtin:d8_x_c5c4", "--json")
    data = json.loads(out)
    assert code == 0
    assert [r["prime"] for r in data] == [2, 5]


def test_verify_fixture_file(tmp_path, capsys):
    path = tmp_path / "fx.txt"
    assert run(capsys, "example", "--id", "s3_x_s3", "--out", str(path))[0] == 0
    assert parse_fixture_file(path).G.order == 36
    code, out, _ = run(capsys, "verify", "--theorem", "D", "--fixture", str(path))
    assert code == 0 and "PASS" in out


def test_cw_gap(capsys):
    code, out, _ = run(capsys, "cw-gap", "--group", "builtin:sg300_25", "--p", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["verdict"] == "CLAIM_FAILS"


def test_sweep_writes_json(tmp_path, capsys):
    path = tmp_path / "sweep.json"
    code, out, _ = run(capsys, "sweep", "--catalog", "builtin", "--max-order", "12",
                       "--theorems", "A,C,COR", "--json", str(path), "--no-timing")
    assert code == 0
    data = json.loads(path.read_text())
    assert data["counts"]["FAIL"] == 0
    assert "seconds" not in data
    assert "FAIL=0" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--theorem", "Z", "--fixture", "builtin:alt5"],
    ["verify", "--theorem", "A", "--fixture", "/nonexistent/file"],
    ["verify", "--theorem", "A", "--p", "4", "--fixture", "builtin:alt5"],
    ["sweep", "--catalog", "other"],
    ["example", "--id", "nope"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_1(capsys, argv):
    assert main(argv) == 1


def test_parse_error_reports_position(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("# grouplab-gens v1\ndegree 3\ngen (1 1 2)\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 1
    assert "line 3, column" in err


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "grouplab.cli", "example", "--id", "s3_x_s3"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "subgroup A" in out.stdout


def _failing(real):
    def fake(theorem, fixture, p=None, **kw):
        r = real(theorem, fixture, p, **kw)
        r.verdict = "FAIL"
        return r
    return fake


def test_verify_fail_exits_2(monkeypatch, capsys):
    import grouplab.cli as cli
    monkeypatch.setattr(cli, "verify", _failing(cli.verify))
    code, out, _ = run(capsys, "verify", "--theorem", "A", "--p", "2", "--fixture", "builtin:s3_x_s3")
    assert code == 2 and "FAIL" in out


def test_sweep_fail_exits_2(monkeypatch, capsys):
    import grouplab.verify as v
    monkeypatch.setattr(v, "verify", _failing(v.verify))
    code, out, _ = run(capsys, "sweep", "--catalog", "builtin", "--max-order", "6", "--theorems", "C")
    assert code == 2
