import contextlib
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from designcodes import cli


def invoke(capsys, *argv):
    status = cli.run(list(argv))
    out = capsys.readouterr().out
    return status, (json.loads(out) if out.strip() else None)


def test_field(capsys):
    status, out = invoke(capsys, "field", "--field", "2 6 1 0 1 1 0 1 1", "--x", "2", "--trace-degree", "1")
    assert status == 0
    assert out["schema"] == 1 and out["command"] == "field"
    assert out["q"] == 64 and out["generator"] == 2 and out["log"] == 1
    assert out["trace"] == 0
    status, _ = invoke(capsys, "field", "--p", "2", "--m", "3", "--x", "9")
    assert status == 2


def test_build_bent_support(capsys, tmp_path):
    target = tmp_path / "cdf.txt"
    status, out = invoke(capsys, "build", "bent-support", "--f", "mono:6:3:a1/tr:1",
                         "--field", "2 6 1 0 1 1 0 1 1", "--out", str(target))
    assert status == 0
    assert out["params"] == [36, 7, 16] and out["match"] is True
    status, wd = invoke(capsys, "code", "wdist", str(target))
    assert status == 0 and wd["counts"][16] == 63 and wd["d"] == 16


def test_code_ops(capsys, tmp_path, hamming84):
    src = tmp_path / "h.txt"
    src.write_text(hamming84.to_text())
    status, out = invoke(capsys, "code", "shorten", str(src), "--coords", "0,1")
    assert status == 0 and out["nu"] == 6 and out["m"] == 2
    status, out = invoke(capsys, "code", "dual", str(src))
    assert out["counts"] == [1, 0, 0, 0, 14, 0, 0, 0, 1]
    status, _ = invoke(capsys, "code", "wdist")
    assert status == 2
    status, _ = invoke(capsys, "code", "wdist", str(src), "--budget-codewords", "4")
    assert status == 3


def test_moments(capsys, tmp_path):
    d = tmp_path / "d.json"
    d.write_text(json.dumps({"counts": [1, 0, 0, 0, 14, 0, 0, 0, 1]}))
    status, out = invoke(capsys, "moments", "check", "--dist", str(d), "--dual", str(d), "--t-max", "6")
    assert status == 0 and out["first_failure"] is None
    bad = tmp_path / "b.json"
    bad.write_text(json.dumps({"counts": [1, 0, 0, 1, 13, 0, 0, 0, 1]}))
    status, out = invoke(capsys, "moments", "check", "--dist", str(d), "--dual", str(bad))
    assert status == 1 and out["first_failure"] == 3
    status, out = invoke(capsys, "moments", "solve", "--nu", "36", "--m", "7", "--unknown", "16,20",
                         "--known", '{"36": 1}', "--dual-prefix", "0")
    assert status == 0 and out["counts"][16] == 63 and out["counts"][20] == 63


def test_predict(capsys, tmp_path):
    status, out = invoke(capsys, "predict", "table", "--family", "vbent_punct1", "--params", "m=3,l=3")
    assert status == 0 and out["counts"][63] == 1
    d = tmp_path / "d.json"
    d.write_text(json.dumps({"counts": [1, 0, 0, 0, 14, 0, 0, 0, 1]}))
    status, out = invoke(capsys, "predict", "shorten", "--dist", str(d), "--t", "1")
    assert out["counts"] == [1, 0, 0, 0, 7, 0, 0, 0]
    status, _ = invoke(capsys, "predict", "table", "--family", "bent_code", "--params", "n=6")
    assert status == 2


def test_fn_commands(capsys, tmp_path):
    status, out = invoke(capsys, "fn", "walsh", "--fn", "kasami:5:2")
    assert status == 0 and out["values"] == [-8, 0, 8]
    assert out["fourth_moment"] == 2031616 and out["fourth_moment_design"] is True
    status, out = invoke(capsys, "fn", "diffspec", "--fn", "mono:6:62")
    assert out["delta"] == 4 and out["two_valued_s"] is None
    table = tmp_path / "g.txt"
    status, out = invoke(capsys, "fn", "family", "gold", "--n", "6", "--i", "2", "--out", str(table))
    assert out["predicted_s"] == 2 == out["two_valued_s"]
    status, out = invoke(capsys, "fn", "diffspec", "--fn", str(table))
    assert out["two_valued_s"] == 2
    status, _ = invoke(capsys, "fn", "family", "kasami", "--n", "6", "--i", "2")
    assert status == 2
    status, _ = invoke(capsys, "fn", "diffspec", "--fn", "mono:12:3")
    assert status == 3
    status, _ = invoke(capsys, "fn", "walsh", "--fn", "nonsense")
    assert status == 2


def test_steiner_and_design_verify(capsys, tmp_path):
    target = tmp_path / "s.json"
    status, out = invoke(capsys, "steiner", "--fn", "gold:6:2", "--out", str(target))
    assert status == 0
    assert out["blocks"] == 336 == out["a4_dual"] and out["lambda"] == 1 and out["pair_lambdas"] == [1]
    status, out = invoke(capsys, "design", "verify", str(target), "--t", "2")
    assert status == 0 and out["lambda"] == 1
    status, out = invoke(capsys, "design", "verify", str(target), "--t", "3")
    assert status == 1 and out["is_design"] is False


def test_design_extract_and_am(capsys, tmp_path, hamming84):
    src = tmp_path / "h.txt"
    src.write_text(hamming84.to_text())
    status, out = invoke(capsys, "design", "extract", str(src), "--weight", "4", "--t", "3")
    assert out["blocks"] == 14 and out["lambda"] == 1
    status, out = invoke(capsys, "am", "classic", str(src), "--t", "3")
    assert out["conclusion"] == "yes"
    status, out = invoke(capsys, "am", "generalized", str(src), "--t", "2", "--S", "4")
    assert out["conclusion"] == "yes"
    status, out = invoke(capsys, "am", "characterize", str(src), "--t", "2")
    assert out["info"]["agree"] is True
    status, _ = invoke(capsys, "am", "generalized", str(src), "--t", "2")
    assert status == 2


def test_build_variants(capsys):
    status, out = invoke(capsys, "build", "ternary", "--m", "3")
    assert out["params"] == [13, 6, 6] and out["match"] is True
    status, out = invoke(capsys, "build", "rm1", "--n", "4")
    assert out["counts"][8] == 30
    status, out = invoke(capsys, "build", "vectorial", "--fn", "kasami:5:2")
    assert out["params"] == [32, 11, 12]
    status, _ = invoke(capsys, "build", "vectorial")
    assert status == 2


def test_usage_errors(capsys):
    assert cli.run(["bogus"]) == 2
    assert cli.run(["repro", "paper-examples", "--subset", "nope"]) == 2
    capsys.readouterr()


def test_repro_subset(capsys):
    status, out = invoke(capsys, "repro", "paper-examples", "--subset", "predictor")
    assert status == 0 and out["passed"] is True


def test_jsonable_large_ints():
    payload = json.loads(cli.dumps({"big": 1 << 70, "small": 5, "neg": -(1 << 63)}))
    assert payload == {"schema": 1, "big": str(1 << 70), "small": 5, "neg": str(-(1 << 63))}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "designcodes.cli", "predict", "table",
                           "--family", "bent_code", "--params", "n=6,nu_f=36"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["params"] == [36, 7, 16]


def captured(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = cli.run(argv)
    return status, buf.getvalue()


@settings(max_examples=10)
@given(st.sampled_from(["kasami:5:2", "gold:5:1", "mono:6:5", "mono:6:3:a1/tr:3", "btt:1:2"]),
       st.integers(0, 5))
def test_output_is_deterministic(spec, seed):
    runs = {captured(["fn", "walsh", "--fn", spec, "--seed", str(s)]) for s in (seed, seed + 1)}
    assert len(runs) == 1
    status, text = runs.pop()
    assert status == 0 and json.loads(text)["schema"] == 1


@pytest.mark.parametrize("argv", [
    ["build", "vectorial", "--fn", "mono:6:3:a1/tr:3"],
    ["steiner", "--fn", "gold:6:2"],
])
def test_byte_identical_runs(capsys, argv):
    cli.run(argv)
    first = capsys.readouterr().out
    cli.run(argv)
    assert capsys.readouterr().out == first
