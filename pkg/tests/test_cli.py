"""Command-line interface: subcommands, exit codes, CSV/JSON contracts."""

import json
import math

import numpy as np
import pytest

from snest.cli import main
from snest.states import DensityMatrix, maximally_mixed


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ----------------------------------------------------------------- povm

def test_povm_trange_prints_interval(capsys):
    code, out, _ = run(capsys, "povm", "trange", "--d", "4", "--N", "5",
                       "--M", "4", "--scheme", "appendix-A")
    assert code == 0
    assert "-0.05719" in out and "0.06804" in out


def test_povm_build_validate_round_trip(tmp_path, capsys):
    path = str(tmp_path / "povm.json")
    code, out, _ = run(capsys, "povm", "build", "--d", "3", "--N", "8",
                       "--M", "2", "--scheme", "appendix-B", "--t", "0.01",
                       "--out", path)
    assert code == 0
    code, out, _ = run(capsys, "povm", "validate", "--in", path)
    assert code == 0
    assert "PASS" in out


def test_povm_build_out_of_range_exit_2(capsys):
    code, _, err = run(capsys, "povm", "build", "--d", "2", "--N", "3",
                       "--M", "2", "--t", "0.5", "--out", "/tmp/unused.json")
    assert code == 2
    assert "interval" in err  # admissible window printed


def test_povm_build_missing_params_exit_2(capsys):
    code, _, err = run(capsys, "povm", "build", "--t", "0.01")
    assert code == 2


def test_povm_from_grouping_file(tmp_path, capsys):
    gpath = tmp_path / "grouping.json"
    gpath.write_text(json.dumps(
        {"d": 2, "N": 3, "M": 2, "perm": [[2], [0], [1]]}))
    out_path = str(tmp_path / "povm.json")
    code, _, _ = run(capsys, "povm", "build", "--grouping-file", str(gpath),
                     "--t", "0.1", "--out", out_path)
    assert code == 0
    code, out, _ = run(capsys, "povm", "validate", "--in", out_path)
    assert code == 0


# ----------------------------------------------------------------- eval

def test_eval_gallery_defaults(capsys):
    code, out, _ = run(capsys, "eval", "--gallery", "example1",
                       "--tau", "0.9", "--q", "0.6")
    assert code == 0
    doc = json.loads(out)
    assert doc["entangled"] is True
    assert doc["measurements"]["A"]["N"] == 3
    assert doc["measurements"]["B"]["M"] == 4
    assert doc["sn_int_lb"] == math.ceil(doc["sn_real_lb"] + 1 - 1e-9)


def test_eval_maximally_mixed_file(tmp_path, capsys):
    path = str(tmp_path / "mixed.json")
    maximally_mixed(3, 3).save(path)
    code, out, _ = run(capsys, "eval", "--state", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["sn_int_lb"] == 1
    assert doc["entangled"] is False


def test_eval_invalid_state_exit_4(tmp_path, capsys):
    path = tmp_path / "bad.json"
    mat = [[[0.245 if i == j else 0.0, 0.0] for j in range(4)] for i in range(4)]
    path.write_text(json.dumps({"dA": 2, "dB": 2, "matrix": mat}))
    code, _, err = run(capsys, "eval", "--state", str(path))
    assert code == 4
    assert "trace" in err


def test_eval_dimension_mismatch_exit_3(tmp_path, capsys):
    path = tmp_path / "mismatch.json"
    mat = [[[0.25 if i == j else 0.0, 0.0] for j in range(4)] for i in range(4)]
    path.write_text(json.dumps({"dA": 2, "dB": 3, "matrix": mat}))
    code, _, err = run(capsys, "eval", "--state", str(path))
    assert code == 3


def test_eval_baselines_and_grouping_comparison(capsys):
    code, out, _ = run(capsys, "eval", "--gallery", "isotropic", "--d", "3",
                       "--v", "0.9", "--baselines", "realignment,fidelity",
                       "--compare-groupings")
    assert code == 0
    doc = json.loads(out)
    assert set(doc["baselines"]) == {"realignment", "fidelity"}
    exp = doc["grouping_experiment"]
    assert exp["difference"] < 1e-10


def test_eval_unknown_gallery_exit_2(capsys):
    code, _, err = run(capsys, "eval", "--gallery", "example1",
                       "--baselines", "bogus")
    assert code == 2


# ---------------------------------------------------------------- sweep

def test_sweep_csv_contract(tmp_path, capsys):
    path = str(tmp_path / "sweep.csv")
    code, _, _ = run(capsys, "sweep", "--gallery", "isotropic", "--d", "3",
                     "--param", "v", "--lo", "0", "--hi", "1", "--points", "9",
                     "--baselines", "realignment", "--csv", path)
    assert code == 0
    lines = open(path).read().splitlines()
    assert lines[0] == ("v,trace_norm,sn_real_lb,sn_int_lb,concurrence_lb,"
                        "sn_real_lb_clamped,realignment")
    assert len(lines) == 10
    rows = [line.split(",") for line in lines[1:]]
    params = [float(r[0]) for r in rows]
    assert params == sorted(params)
    for r in rows:
        real_lb, int_lb = float(r[2]), int(r[3])
        assert int_lb == max(1, math.ceil(real_lb + 1 - 1e-9))
        assert float(r[5]) == max(0.0, real_lb)


def test_sweep_deterministic_across_thread_counts(tmp_path, capsys, monkeypatch):
    a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    args = ["sweep", "--gallery", "example1", "--param", "q", "--lo", "0",
            "--hi", "1", "--points", "7"]
    monkeypatch.setenv("SNEST_THREADS", "1")
    assert main(args + ["--csv", a]) == 0
    monkeypatch.setenv("SNEST_THREADS", "5")
    assert main(args + ["--csv", b]) == 0
    capsys.readouterr()
    assert open(a, "rb").read() == open(b, "rb").read()


def test_sweep_rejects_bad_range(capsys):
    code, _, err = run(capsys, "sweep", "--gallery", "example2", "--param", "p",
                       "--lo", "1", "--hi", "0", "--points", "5")
    assert code == 2


def test_sweep_rejects_unknown_param(capsys):
    code, _, err = run(capsys, "sweep", "--gallery", "example2",
                       "--param", "tau", "--lo", "0", "--hi", "1",
                       "--points", "5")
    assert code == 2
    assert "tau" in err


def test_sweep_bad_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("SNEST_THREADS", "zero")
    code, _, err = run(capsys, "sweep", "--gallery", "example2", "--param", "p",
                       "--lo", "0", "--hi", "1", "--points", "3")
    assert code == 2


# ------------------------------------------------------------- threshold

def test_threshold_example1_red(capsys):
    code, out, _ = run(capsys, "threshold", "--gallery", "example1",
                       "--param", "q", "--curve", "red", "--level", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(0.42115, abs=1e-3)
    # re-evaluation lands within tolerance of the level
    assert abs(doc["curve_value_at_root"] - doc["level"]) < 1e-4


def test_threshold_requires_bracketing(capsys):
    code, _, err = run(capsys, "threshold", "--gallery", "example1",
                       "--param", "q", "--curve", "red", "--level", "50")
    assert code == 2
    assert "not bracketed" in err


def test_threshold_realignment_curve(capsys):
    code, out, _ = run(capsys, "threshold", "--gallery", "example2",
                       "--param", "p", "--curve", "realignment",
                       "--level", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(0.5475, abs=1e-3)


# ------------------------------------------------------------- reproduce

def test_reproduce_example3(tmp_path, capsys):
    code, out, _ = run(capsys, "reproduce", "example3",
                       "--outdir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "example3.csv").exists()
    assert (tmp_path / "example3.png").exists()
    assert "closed form vs numeric max deviation" in out
    assert "holds" in out
    header = (tmp_path / "example3.csv").read_text().splitlines()[0]
    assert header == "d,t,v,closed_form,numeric,abs_difference"


def test_reproduce_writes_png_next_to_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "reproduce", "fig3", "--outdir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "fig3.csv").exists()
    assert (tmp_path / "fig3.png").exists()
    assert "dominance" in out


def test_reproduce_deterministic_csv(tmp_path, capsys):
    d1, d2 = tmp_path / "r1", tmp_path / "r2"
    assert main(["reproduce", "example3", "--outdir", str(d1)]) == 0
    assert main(["reproduce", "example3", "--outdir", str(d2)]) == 0
    capsys.readouterr()
    assert (d1 / "example3.csv").read_bytes() == (d2 / "example3.csv").read_bytes()
