import json
import subprocess
import sys
from pathlib import Path

DATA = Path(__file__).parent / "data"


def run_cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "bfforms", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_analyze_or2_text():
    result = run_cli("analyze", "--n", "2", "--tt", "E")
    assert result.returncode == 0
    assert "cfr: x2 + x1" in result.stdout
    assert "'s_ad': 2" in result.stdout
    assert "labels:" in result.stdout


def test_analyze_hex_prefix_and_case():
    plain = run_cli("analyze", "--n", "2", "--tt", "e")
    prefixed = run_cli("analyze", "--n", "2", "--tt", "0xE")
    assert plain.returncode == prefixed.returncode == 0
    assert plain.stdout == prefixed.stdout


def test_analyze_json_schema():
    result = run_cli("analyze", "--n", "3", "--tt", "0x96", "--format", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["schema"] == "bfforms.analyze/1"
    assert payload["forms"]["rm"]["cost"]["s_ad"] == 3
    assert payload["forms"]["cfr"]["cost"]["s_ad"] == 4
    assert payload["labels"]["s_s"] == "RM"


def test_analyze_csv_format():
    result = run_cli("analyze", "--n", "2", "--tt", "E", "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "record,field,value"
    assert "cost,cfr.s_ad,2" in lines


def test_analyze_from_pla_output_column():
    result = run_cli(
        "analyze", "--n", "2", "--pla", str(DATA / "two_out.pla"), "--output", "1"
    )
    assert result.returncode == 0
    assert "cfr: x1*x2" in result.stdout


def test_usage_errors_exit_1():
    assert run_cli().returncode == 1
    assert run_cli("analyze", "--n", "2").returncode == 1
    assert run_cli("analyze", "--n", "2", "--tt", "E", "--criterion", "x").returncode == 1
    assert run_cli("analyze", "--n", "9", "--tt", "E").returncode == 1
    assert run_cli("sweep", "--n", "9", "--out", "/tmp/x").returncode == 1


def test_input_format_errors_exit_2(tmp_path):
    bad_hex = run_cli("analyze", "--n", "2", "--tt", "zz")
    assert bad_hex.returncode == 2
    out_of_range = run_cli("analyze", "--n", "1", "--tt", "FFFF")
    assert out_of_range.returncode == 2
    bad = tmp_path / "bad.pla"
    bad.write_text(".i 2\n.o 1\n111 1\n.e\n")
    result = run_cli("analyze", "--n", "2", "--pla", str(bad))
    assert result.returncode == 2
    assert "line 3" in result.stderr
    missing = run_cli("analyze", "--n", "2", "--pla", str(tmp_path / "nope.pla"))
    assert missing.returncode == 2


def test_guard_abort_exits_3(monkeypatch):
    import os

    env = dict(os.environ, BFFORMS_GUARD_SECS="0")
    result = run_cli("analyze", "--n", "3", "--tt", "E8", env=env)
    assert result.returncode == 3
    assert "guard" in result.stderr


def test_sweep_writes_reports(tmp_path):
    out = tmp_path / "report"
    result = run_cli("sweep", "--n", "2", "--out", str(out))
    assert result.returncode == 0
    assert sorted(p.name for p in out.iterdir()) == [
        "losses.csv",
        "records.csv",
        "rei.csv",
        "summary.json",
        "weights.csv",
    ]
    assert result.stdout == ""  # data goes to files, diagnostics to stderr


def test_sample_flagged_and_deterministic(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    for out in (a, b):
        result = run_cli(
            "sample", "--n", "3", "--count", "200", "--seed", "77", "--out", str(out)
        )
        assert result.returncode == 0
    for name in ("records.csv", "rei.csv", "weights.csv", "losses.csv", "summary.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    meta = json.loads((a / "summary.json").read_text())["meta"]
    assert meta["sampled"] is True
    assert meta["seed"] == 77
    stderr_column = (a / "weights.csv").read_text().splitlines()[0]
    assert stderr_column == "criterion,label,weight,stderr"


def test_convert_cfr_emits_pla(tmp_path):
    result = run_cli("convert", "--pla", str(DATA / "xor3.pla"), "--form", "cfr")
    assert result.returncode == 0
    assert "cfr:" in result.stdout
    assert ".i 3" in result.stdout and ".e" in result.stdout


def test_convert_rm_best_and_fixed():
    best = run_cli("convert", "--pla", str(DATA / "or2.pla"), "--form", "rm")
    assert best.returncode == 0
    assert "rm (polarity=3): 1 ^ ~x1*~x2" in best.stdout
    fixed = run_cli(
        "convert", "--pla", str(DATA / "or2.pla"), "--form", "rm", "--polarity", "0"
    )
    assert "rm (polarity=0): x2 ^ x1 ^ x1*x2" in fixed.stdout
    bad = run_cli(
        "convert", "--pla", str(DATA / "or2.pla"), "--form", "rm", "--polarity", "9"
    )
    assert bad.returncode == 2


def test_convert_afr():
    result = run_cli("convert", "--pla", str(DATA / "xor2.pla"), "--form", "afr",
                     "--polarity", "0")
    assert result.returncode == 0
    assert "x2 + x1 - 2*x1*x2" in result.stdout


def test_pla_warnings_on_stderr():
    result = run_cli("analyze", "--n", "2", "--pla", str(DATA / "labels.pla"))
    assert result.returncode == 0
    assert "labels ignored" in result.stderr
    assert "labels ignored" not in result.stdout
