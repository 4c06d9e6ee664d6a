import json
import subprocess
import sys

import pytest

from modxn.cli import main, parse_range


def run(tmp_path, *args):
    out = tmp_path / "r.json"
    code = main([*args, "--json", str(out)])
    text = out.read_text(encoding="utf-8") if out.exists() else None
    return code, text


def payload(text):
    header, body = text.split("\n", 1)
    assert json.loads(header)["tool"] == "modxn"
    return json.loads(body)


def test_parse_range():
    assert list(parse_range("7..9")) == [7, 8, 9]
    assert list(parse_range("6")) == [6]


def test_invariants_rows(tmp_path):
    code, text = run(tmp_path, "invariants", "--range", "7..9")
    assert code == 0
    rows = payload(text)["rows"]
    got = [tuple(r[k] for k in ("N", "delta", "genus", "aut_order", "cusp_count", "index_bound_m")) for r in rows]
    assert got == [("7", "168", "3", "168", "24", "2"), ("8", "192", "5", "192", "24", "2"), ("9", "324", "10", "324", "36", "2")]


def test_invariants_low_levels(tmp_path):
    code, text = run(tmp_path, "invariants", "--range", "6")
    assert code == 0
    row = payload(text)["rows"][0]
    assert row["genus"] == "1" and row["status"] == "below genus 2, theorems not applicable"
    code, text = run(tmp_path, "invariants", "--range", "1")
    row = payload(text)["rows"][0]
    assert (row["delta"], row["genus"]) == ("1", "0")


def test_determinism(tmp_path):
    a = run(tmp_path, "aut-certify", "--range", "7..20")[1]
    b = run(tmp_path, "aut-certify", "--range", "7..20")[1]
    assert a == b

    def no_numbers(tok):
        raise AssertionError(f"bare JSON number {tok}")

    json.loads(a.split("\n", 1)[1], parse_int=no_numbers, parse_float=no_numbers)


def test_aut_certify(tmp_path):
    code, text = run(tmp_path, "aut-certify", "--range", "7..60")
    assert code == 0
    rows = payload(text)["rows"]
    assert all(r["verdict"] == "Certified" and r["verified"] for r in rows)
    assert rows[0]["branch"] == "Prime"


def test_classify(tmp_path):
    code, text = run(tmp_path, "classify", "--range", "7..20")
    assert code == 0
    rows = payload(text)["rows"]
    assert [r["N"] for r in rows if r["bielliptic"]] == ["7", "8"]
    assert not any(r["hyperelliptic"] for r in rows)
    n9 = next(r for r in rows if r["N"] == "9")
    assert any("18 > 12" in e["reason"] for e in n9["evidence"])


def test_points(tmp_path):
    code, text = run(tmp_path, "points", "--model", "klein", "--prime", "2")
    assert code == 0 and payload(text)["rows"][0]["count"] == "3"
    code, text = run(tmp_path, "points", "--model", "x064", "--height", "100")
    assert code == 0 and payload(text)["rows"][0]["count"] == "4"
    code, text = run(tmp_path, "points", "--model", "wiman", "--twist", "3", "--height", "100")
    assert code == 0 and payload(text)["rows"][0]["count"] == "0"


def test_twist_scan(tmp_path):
    code, text = run(tmp_path, "twist-scan", "--dmax", "20", "--height", "50")
    assert code == 0
    rows = payload(text)["rows"]
    assert [r["d"] for r in rows if r["count"] != "0"] == ["1", "2"]
    assert all(r["images"] == "2" for r in rows if r["count"] != "0")


@pytest.mark.parametrize(
    "args",
    [
        ["aut-certify", "--range", "6"],
        ["classify", "--range", "3..9"],
        ["invariants", "--range", "9..7"],
        ["invariants", "--range", "x"],
        ["points", "--model", "nope", "--prime", "5"],
        ["points", "--model", "klein", "--prime", "7"],
        ["points", "--model", "klein", "--prime", "8"],
        ["points", "--model", "klein"],
        ["twist-scan", "--dmax", "0"],
        [],
    ],
)
def test_usage_errors(args, capsys):
    assert main(args) == 2


def test_assertion_failure_exit_code(monkeypatch, tmp_path):
    import modxn.cli as cli
    from modxn.classify import Classification

    monkeypatch.setattr(cli, "classify_XN", lambda N: Classification(N, True, False, ()))
    assert main(["classify", "--range", "7"]) == 1


def test_table_derived_from_json(capsys):
    assert main(["invariants", "--range", "7"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[2].split()[:3] == ["7", "168", "3"]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "modxn", "invariants", "--range", "8"], capture_output=True, text=True)
    assert r.returncode == 0 and "192" in r.stdout
