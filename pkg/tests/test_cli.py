"""End-to-end CLI behaviour and exit codes."""

import csv

import numpy as np
import pytest

from rpt.cli import dispatch
from rpt.io import read_csv, write_csv, Signal


def synth_file(tmp_path, name="clean.csv", duration="10"):
    path = tmp_path / name
    code = dispatch(
        ["synth", "--output", str(path), "--duration", duration, "--heart-rate", "72"]
    )
    assert code == 0
    return path


class TestSynth:
    def test_writes_csv(self, tmp_path):
        path = synth_file(tmp_path)
        sig = read_csv(path)
        assert len(sig) == 3600

    def test_deterministic_output(self, tmp_path):
        a = synth_file(tmp_path, "a.csv")
        b = synth_file(tmp_path, "b.csv")
        assert a.read_bytes() == b.read_bytes()

    def test_missing_output_flag(self):
        assert dispatch(["synth"]) == 1


class TestContaminate:
    def test_adds_tone(self, tmp_path):
        clean = synth_file(tmp_path)
        dirty = tmp_path / "dirty.csv"
        code = dispatch(
            [
                "contaminate",
                "--input",
                str(clean),
                "--output",
                str(dirty),
                "--f0",
                "50",
                "--amplitude",
                "0.5",
            ]
        )
        assert code == 0
        a = read_csv(clean).samples
        b = read_csv(dirty).samples
        n = np.arange(len(a))
        assert np.abs(b - a - 0.5 * np.sin(2 * np.pi * 50 * n / 360)).max() < 1e-9

    def test_missing_file_is_data_error(self, tmp_path):
        code = dispatch(
            [
                "contaminate",
                "--input",
                str(tmp_path / "absent.csv"),
                "--output",
                str(tmp_path / "out.csv"),
            ]
        )
        assert code == 2


class TestSpectrum:
    def test_pure_tone_block(self, tmp_path, capsys):
        n = np.arange(360)
        path = tmp_path / "tone.csv"
        write_csv(
            Signal(samples=np.sin(2 * np.pi * 50 * n / 360), fs=360.0), path
        )
        code = dispatch(
            ["spectrum", "--input", str(path), "--block-size", "36"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "period,energy,fraction"
        rows = {int(l.split(",")[0]): float(l.split(",")[2]) for l in lines[1:]}
        assert rows[36] > 0.99999

    def test_block_out_of_range(self, tmp_path):
        path = tmp_path / "short.csv"
        write_csv(Signal(samples=np.zeros(10) + 1.0, fs=360.0), path)
        code = dispatch(
            ["spectrum", "--input", str(path), "--block-size", "36"]
        )
        assert code == 2


class TestDenoise:
    def test_rpt_removes_tone(self, tmp_path):
        clean = synth_file(tmp_path)
        dirty = tmp_path / "dirty.csv"
        dispatch(
            ["contaminate", "--input", str(clean), "--output", str(dirty)]
        )
        out = tmp_path / "out.csv"
        code = dispatch(
            [
                "denoise",
                "--method",
                "rpt",
                "--input",
                str(dirty),
                "--output",
                str(out),
                "--block-size",
                "36",
            ]
        )
        assert code == 0
        cleaned = read_csv(out).samples
        ref = read_csv(clean).samples
        dirty_err = np.linalg.norm(read_csv(dirty).samples - ref)
        assert np.linalg.norm(cleaned - ref) < dirty_err

    def test_notch_method(self, tmp_path):
        clean = synth_file(tmp_path)
        out = tmp_path / "out.csv"
        code = dispatch(
            [
                "denoise",
                "--method",
                "notch",
                "--input",
                str(clean),
                "--output",
                str(out),
                "--block-size",
                "36",
            ]
        )
        assert code == 0
        assert len(read_csv(out)) == 3600

    def test_bad_block_size_names_admissible(self, tmp_path, capsys):
        clean = synth_file(tmp_path)
        code = dispatch(
            [
                "denoise",
                "--method",
                "rpt",
                "--input",
                str(clean),
                "--output",
                str(tmp_path / "o.csv"),
                "--block-size",
                "35",
            ]
        )
        assert code == 3
        assert "36" in capsys.readouterr().err

    def test_plot_csv(self, tmp_path):
        clean = synth_file(tmp_path)
        plot = tmp_path / "plot.csv"
        code = dispatch(
            [
                "denoise",
                "--method",
                "rpt",
                "--input",
                str(clean),
                "--output",
                str(tmp_path / "o.csv"),
                "--block-size",
                "36",
                "--plot-csv",
                str(plot),
            ]
        )
        assert code == 0
        with open(plot) as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 3600
        assert set(rows[0]) == {"index", "original", "cleaned"}


class TestCompare:
    def test_full_grid(self, tmp_path, capsys):
        clean = synth_file(tmp_path, duration="30")
        dirty = tmp_path / "dirty.csv"
        dispatch(["contaminate", "--input", str(clean), "--output", str(dirty)])
        report = tmp_path / "report.csv"
        errdir = tmp_path / "errors"
        code = dispatch(
            [
                "compare",
                "--clean",
                str(clean),
                "--dirty",
                str(dirty),
                "--block-sizes",
                "36,72",
                "--output",
                str(report),
                "--block-errors-dir",
                str(errdir),
            ]
        )
        assert code == 0
        with open(report) as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 4
        totals = {(r["block_size"], r["method"]): float(r["total_error"]) for r in rows}
        for n in ("36", "72"):
            assert totals[(n, "rpt")] < totals[(n, "notch")]
        assert sorted(p.name for p in errdir.iterdir()) == [
            "errors_notch_n36.csv",
            "errors_notch_n72.csv",
            "errors_rpt_n36.csv",
            "errors_rpt_n72.csv",
        ]

    def test_bad_block_sizes_flag(self, tmp_path):
        clean = synth_file(tmp_path)
        code = dispatch(
            [
                "compare",
                "--clean",
                str(clean),
                "--dirty",
                str(clean),
                "--block-sizes",
                "36,oops",
                "--output",
                str(tmp_path / "r.csv"),
            ]
        )
        assert code == 1


class TestUsage:
    def test_unknown_subcommand(self):
        assert dispatch(["frobnicate"]) == 1

    def test_no_subcommand(self):
        assert dispatch([]) == 1
