"""Command-line interface: flags, outputs, exit codes."""

from __future__ import annotations

import contextlib
import io
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from morsealg.cli import run


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


def test_help_exits_zero():
    code, out, _ = _run(["--help"])
    assert code == 0
    assert "scan" in out and "physical" in out


def test_missing_subcommand_is_usage_error():
    code, _, _ = _run([])
    assert code == 2


def test_unknown_subcommand_is_usage_error():
    code, _, _ = _run(["frobnicate"])
    assert code == 2


def test_scan_writes_json_and_summary(tmp_path):
    out_path = tmp_path / "r.json"
    code, out, err = _run(["scan", "--n-max", "4", "--v-max", "6", "--out", str(out_path)])
    assert code == 0
    assert out_path.exists()
    assert "cells: 35" in out
    assert "mismatches: 0" in out
    assert f"wrote {out_path}" in err


def test_scan_csv_format(tmp_path):
    out_path = tmp_path / "r.csv"
    code, _, _ = _run(
        ["scan", "--n-max", "2", "--v-max", "2", "--format", "csv", "--out", str(out_path)]
    )
    assert code == 0
    first = out_path.read_text(encoding="utf-8").split("\n", 1)[0]
    assert first.startswith("n,v,s,s_sign,op_class,ev1")


def test_scan_rejects_bad_bounds(tmp_path):
    code, _, err = _run(["scan", "--n-max", "-2", "--out", str(tmp_path / "x.json")])
    assert code == 2 and "non-negative" in err


def test_scan_rejects_bad_threads(tmp_path):
    code, _, _ = _run(
        ["scan", "--n-max", "1", "--v-max", "1", "--threads", "0", "--out", str(tmp_path / "x")]
    )
    assert code == 2


def test_scan_unwritable_destination_is_io_error(tmp_path):
    code, _, err = _run(
        ["scan", "--n-max", "0", "--v-max", "0", "--out", str(tmp_path / "no_dir" / "x.json")]
    )
    assert code == 3 and "error:" in err


def test_scan_threads_flag_matches_serial_output(tmp_path):
    serial, threaded = tmp_path / "a.json", tmp_path / "b.json"
    assert _run(["scan", "--n-max", "3", "--v-max", "4", "--out", str(serial)])[0] == 0
    assert (
        _run(
            ["scan", "--n-max", "3", "--v-max", "4", "--threads", "2", "--out", str(threaded)]
        )[0]
        == 0
    )
    assert serial.read_bytes() == threaded.read_bytes()


def test_plot_from_json_and_csv(tmp_path):
    json_report = tmp_path / "r.json"
    csv_report = tmp_path / "r.csv"
    _run(["scan", "--n-max", "3", "--v-max", "5", "--out", str(json_report)])
    _run(["scan", "--n-max", "3", "--v-max", "5", "--format", "csv", "--out", str(csv_report)])
    for report, mode in ((json_report, "equality"), (csv_report, "sign")):
        svg = tmp_path / f"{mode}.svg"
        code, _, _ = _run(["plot", "--in", str(report), "--mode", mode, "--out", str(svg)])
        assert code == 0
        ET.fromstring(svg.read_text(encoding="utf-8"))


def test_plot_missing_input_is_io_error(tmp_path):
    code, _, _ = _run(
        ["plot", "--in", str(tmp_path / "nope.json"), "--mode", "sign", "--out", str(tmp_path / "x.svg")]
    )
    assert code == 3


def test_plot_malformed_report_is_usage_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a report\n", encoding="utf-8")
    code, _, _ = _run(["plot", "--in", str(bad), "--mode", "sign", "--out", str(tmp_path / "x.svg")])
    assert code == 2


def test_plot_rejects_unknown_mode(tmp_path):
    code, _, _ = _run(
        ["plot", "--in", str(tmp_path / "r.json"), "--mode", "rainbow", "--out", str(tmp_path / "x.svg")]
    )
    assert code == 2


def test_cell_output():
    code, out, _ = _run(["cell", "--n", "0", "--v", "2"])
    assert code == 0
    for line in (
        "cell (0, 2)",
        "s: 1/2",
        "s_sign: NonNegative",
        "op_class: Proper",
        "ev1: -1 (Proper)",
        "ev2: -1 (Proper)",
        "ev3: -1",
        "k0: -1/2",
        "all_equal: true",
    ):
        assert line in out


def test_cell_trivial_output():
    code, out, _ = _run(["cell", "--n", "0", "--v", "1"])
    assert code == 0
    assert "op_class: Zero" in out
    assert "ev1: 0 (TrivialZero)" in out
    assert "ev2: 0 (Proper)" in out


def test_cell_verbose_sections():
    code, out, _ = _run(["cell", "--n", "0", "--v", "2", "--verbose"])
    assert code == 0
    assert "state: exp(-y/2) * y^(1/2) * (1)" in out
    assert "normalization: 1" in out
    assert "shifted commutator (closed form):" in out
    assert "composed action: 1 (Proper)" in out
    assert "stationary operator action: zero function" in out
    assert "lowering: Holds" in out


def test_cell_verbose_undefined_branches():
    code, out, _ = _run(["cell", "--n", "0", "--v", "1", "--verbose"])
    assert code == 0
    assert "normalization: undefined" in out
    assert "shifted commutator (composed): undefined" in out
    assert "unshifted commutator: undefined at s = 0" in out


def test_cell_rejects_negative():
    code, _, _ = _run(["cell", "--n", "-1", "--v", "0"])
    assert code == 2


def test_ladder_single_cell():
    code, out, _ = _run(["ladder", "--n", "1", "--v", "4"])
    assert code == 0
    assert "lowering (1, 4): Holds" in out
    assert "raising (1, 4): OutOfDomain" in out


def test_ladder_requires_both_coordinates():
    code, _, _ = _run(["ladder", "--n", "1"])
    assert code == 2


def test_ladder_sweep():
    code, out, _ = _run(["ladder", "--v-max", "12"])
    assert code == 0
    assert "fails: 0" in out


def test_verify_small_grid():
    code, out, _ = _run(["verify", "--n-max", "4", "--v-max", "6"])
    assert code == 0
    assert out.count("PASS") == 5
    assert "FAIL" not in out


def test_physical_output():
    code, out, _ = _run(
        ["physical", "--v0", "0.5", "--beta", "1", "--mass", "1", "--hbar", "1"]
    )
    assert code == 0
    assert "v = 2.0" in out
    assert "s = 0.5" in out
    assert "E = -0.125" in out


def test_physical_non_bound_level():
    code, _, err = _run(
        ["physical", "--v0", "0.5", "--beta", "1", "--mass", "1", "--hbar", "1", "--n", "1"]
    )
    assert code == 1
    assert "not bound" in err


def test_physical_rejects_bad_constants():
    code, _, _ = _run(
        ["physical", "--v0", "-1", "--beta", "1", "--mass", "1", "--hbar", "1"]
    )
    assert code == 2


def test_stdout_is_deterministic():
    first = _run(["cell", "--n", "2", "--v", "9", "--verbose"])
    second = _run(["cell", "--n", "2", "--v", "9", "--verbose"])
    assert first == second


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "morsealg.cli", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "morsealg" in proc.stdout
