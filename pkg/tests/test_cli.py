import json
import subprocess
import sys

import pytest

from invcurve.cli import main, run


def test_decide_nonsingular_v48():
    text, code = run(["decide", "nonsingular", "--group", "V", "--degree", "48"])
    out = json.loads(text)
    assert code == 0
    assert out["exists"] is False and out["failed_conditions"] == [4]


def test_decide_integral_json():
    out = json.loads(run(["decide", "integral", "--group", "I", "--degree", "24"])[0])
    assert out["exists"] is True
    assert any("22 ≤ 1" in e["statement"] for e in out["certificate"]["log"])


def test_molien_json():
    text, code = run(["molien", "--group", "K", "--max", "20", "--json"])
    assert code == 0
    assert json.loads(text) == [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3, 0, 3]


def test_verify_icosahedral_wiman():
    text, code = run(["verify", "--group", "I", "--coords", "wiman"])
    assert code == 0
    assert "jacobian-at-(1,0,0) = 7290: pass" in text


def test_verify_klein_all_pass():
    text, code = run(["verify", "--group", "K", "--json"])
    report = json.loads(text)
    assert code == 0
    assert {r["status"] for r in report["results"]} == {"pass"}


def test_valentiner_needs_deep(capsys):
    text, code = run(["verify", "--group", "V", "--coords", "wiman", "--checks", "zero-locus"])
    assert code == 0 and "inconclusive" in text
    assert "warning" in capsys.readouterr().err
    _, code = run(["verify", "--group", "V", "--coords", "wiman", "--checks", "zero-locus",
                   "--strict"])
    assert code == 1


def test_valentiner_deep_light_check():
    text, code = run(["verify", "--group", "V", "--coords", "wiman", "--deep",
                      "--checks", "zero-locus,transversal"])
    assert code == 0 and text.count(": pass") == 2


def test_budget_exhaustion_is_inconclusive(monkeypatch):
    args = ["verify", "--group", "K", "--checks", "nonsingular", "--json"]
    r = json.loads(run(args + ["--budget", "1"])[0])
    assert r["results"][0]["status"] == "inconclusive"
    monkeypatch.setenv("INVCURVE_BUDGET", "1")
    assert json.loads(run(args)[0])["results"][0]["status"] == "inconclusive"


def test_json_is_byte_stable():
    for argv in (["verify", "--group", "K", "--json"],
                 ["table", "integral", "--group", "V", "--json"],
                 ["build-invariants", "--group", "I", "--coords", "wiman"]):
        assert run(argv)[0] == run(argv)[0]


def test_build_invariants_out(tmp_path):
    path = tmp_path / "k.json"
    text, code = run(["build-invariants", "--group", "K", "--out", str(path)])
    data = json.loads(path.read_text())
    assert code == 0 and data["degrees"] == [4, 6, 14, 21]


def test_classify():
    out = json.loads(run(["classify", "--group", "K", "--degree", "36"])[0])
    assert out["type"] == "A5" and out["m"] == 3


def test_table_defaults_to_100():
    rows = json.loads(run(["table", "nonsingular", "--group", "I", "--json"])[0])
    assert len(rows) == 100
    text, _ = run(["table", "integral", "--group", "K"])
    assert "d <= 100" in text


@pytest.mark.parametrize("argv", [
    ["decide", "nonsingular", "--group", "X", "--degree", "4"],
    ["frobnicate", "--group", "V"],
    ["decide", "nonsingular", "--group", "V"],
    ["verify", "--group", "K", "--checks", "bogus"],
    ["verify", "--group", "K", "--coords", "wiman"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "invcurve.cli", "decide", "nonsingular",
                           "--group", "K", "--degree", "18"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["exists"] is True
    proc = subprocess.run([sys.executable, "-m", "invcurve.cli", "molien"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
