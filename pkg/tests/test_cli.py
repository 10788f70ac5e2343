import io
import json

import numpy as np
import pytest

import config.config as config
import event_logging.event_logger as event_logger
import trigflop
from cli.commands import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, verify_errors
from cli.vector_file import format_vector, read_vector, write_vector
from oracles.naive import naive_dct4, naive_dft
from utils.errors import SizeMismatchError, VectorFileError


def _numbers(text: str) -> np.ndarray:
    return np.array([float(line) for line in text.splitlines()])


class TestTransformCommand:
    def test_random_input_is_seeded(self, capsys):
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "8", "--random", "--seed", "1"]) == EXIT_OK
        first = capsys.readouterr().out
        assert len(first.splitlines()) == 8
        trigflop.main(["transform", "--kind", "dct4", "--n", "8", "--random", "--seed", "1"])
        assert capsys.readouterr().out == first

    def test_input_file(self, tmp_path, capsys):
        x = np.array([0.5, -1.0, 2.0, 0.25])
        path = tmp_path / "x.txt"
        path.write_text("".join(f"{v}\n" for v in x))
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "4", "--input", str(path)]) == EXIT_OK
        np.testing.assert_allclose(_numbers(capsys.readouterr().out), naive_dct4(x), atol=1e-14)

    def test_mdct_reads_two_n_values(self, tmp_path, capsys):
        path = tmp_path / "x.json"
        path.write_text(json.dumps(list(range(16))))
        assert trigflop.main(["transform", "--kind", "mdct", "--n", "8", "--input", str(path)]) == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 8

    def test_fft_complex_lines(self, tmp_path, capsys):
        path = tmp_path / "z.txt"
        path.write_text("1 0\n0 1\n2\n-1 -1\n")
        assert trigflop.main(["transform", "--kind", "fft", "--n", "4", "--input", str(path)]) == EXIT_OK
        pairs = np.array([[float(t) for t in line.split()] for line in capsys.readouterr().out.splitlines()])
        np.testing.assert_allclose(pairs[:, 0] + 1j * pairs[:, 1], naive_dft([1, 1j, 2, -1 - 1j]), atol=1e-14)

    def test_stdin_and_json_output(self, tmp_path, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1\n0\n"))
        out = tmp_path / "y.json"
        assert trigflop.main(["transform", "--kind", "dct3", "--n", "2", "--input", "-", "--output", str(out)]) == EXIT_OK
        assert json.loads(out.read_text()) == [1.0, 1.0]

    def test_not_a_power_of_two(self, capsys):
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "7", "--random"]) == EXIT_USAGE
        assert "power of two" in capsys.readouterr().err

    def test_bad_vector_file_names_the_line(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("1.0\nabc\n3\n4\n")
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "4", "--input", str(path)]) == EXIT_USAGE
        assert f"{path}:2" in capsys.readouterr().err

    def test_wrong_length(self, tmp_path):
        path = tmp_path / "short.txt"
        path.write_text("1\n2\n3\n")
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "4", "--input", str(path)]) == EXIT_USAGE

    def test_scale_rejected_for_dct4(self):
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "4", "--random", "--scale", "1"]) == EXIT_USAGE

    def test_missing_source(self):
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "4"]) == EXIT_USAGE

    def test_unknown_kind(self):
        assert trigflop.main(["transform", "--kind", "dct5", "--n", "4", "--random"]) == EXIT_USAGE

    def test_unwritable_output_names_the_path(self, tmp_path, capsys):
        out = tmp_path / "missing" / "y.txt"
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "4", "--random", "--output", str(out)]) == EXIT_USAGE
        assert f"{out}: " in capsys.readouterr().err

    def test_non_finite_json_output_is_rejected(self, tmp_path, capsys):
        path = tmp_path / "x.txt"
        path.write_text("nan\n1\n2\n3\n")
        out = tmp_path / "y.json"
        assert trigflop.main(["transform", "--kind", "dct4", "--n", "4", "--input", str(path), "--output", str(out)]) == EXIT_USAGE
        assert "NaN" in capsys.readouterr().err
        assert not out.exists()


class TestCountCommand:
    def test_csv_check(self, capsys):
        assert trigflop.main(["count", "--kind", "dct4", "--min", "1", "--max", "64", "--check"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "kind,n,adds,mults,flops,predicted,match"
        assert len(lines) == 8
        assert lines[4].startswith("dct4,8,") and lines[4].endswith(",54,54,true")

    def test_json(self, capsys):
        assert trigflop.main(["count", "--kind", "mdct", "--kind", "fft", "--min", "4", "--max", "8", "--format", "json"]) == EXIT_OK
        records = json.loads(capsys.readouterr().out)
        assert [(r["kind"], r["n"]) for r in records] == [("fft", 4), ("fft", 8), ("mdct", 4), ("mdct", 8)]
        assert all(r["match"] is True for r in records)

    def test_saves_table_when_output_folder_set(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setattr(config, "OUTPUT_FOLDER", str(tmp_path))
        monkeypatch.setattr(event_logger, "_current_run_id", "cafe0001")
        assert trigflop.main(["count", "--kind", "imdct", "--min", "2", "--max", "4"]) == EXIT_OK
        saved = tmp_path / "cafe0001-counts" / "counts.csv"
        assert saved.read_text() == capsys.readouterr().out
        entries = json.loads((tmp_path / "cafe0001-event-log.json").read_text())
        assert [e["type"] for e in entries][:2] == ["run_metadata", "session_start"]
        assert sum(e["type"] == "count_audit" for e in entries) == 2

    def test_bad_range(self):
        assert trigflop.main(["count", "--min", "3", "--max", "8"]) == EXIT_USAGE


class TestTableCommand:
    def test_rows(self, capsys):
        assert trigflop.main(["table", "--min", "8", "--max", "16"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["n,previous,new", "8,56,54", "16,144,140"]

    def test_csv_layout_follows_config(self, monkeypatch, capsys):
        monkeypatch.setattr(config, "CSV_SEPARATOR", ";")
        monkeypatch.setattr(config, "CSV_LINE_END", "\r\n")
        assert trigflop.main(["table", "--min", "8", "--max", "16"]) == EXIT_OK
        assert capsys.readouterr().out == "n;previous;new\r\n8;56;54\r\n16;144;140\r\n"

    def test_count_csv_line_end(self, monkeypatch, capsys):
        monkeypatch.setattr(config, "CSV_LINE_END", "\r\n")
        assert trigflop.main(["count", "--kind", "dct4", "--min", "8", "--max", "8"]) == EXIT_OK
        lines = capsys.readouterr().out.split("\r\n")
        assert lines[0] == "kind,n,adds,mults,flops,predicted,match"
        assert lines[1].startswith("dct4,8,") and lines[1].endswith(",54,54,true")
        assert lines[2:] == [""]


class TestVerifyCommand:
    @pytest.mark.parametrize("kind", ["dct3", "dst3", "dct4", "dst4", "mdct", "imdct", "fft"])
    def test_passes(self, kind, capsys):
        assert trigflop.main(["verify", "--kind", kind, "--n", "64", "--trials", "3"]) == EXIT_OK
        line = capsys.readouterr().out.strip()
        assert line.startswith(f"kind={kind} n=64 trials=3 ") and line.endswith("PASS")

    def test_scaled_variants_pass(self):
        assert trigflop.main(["verify", "--kind", "dct3", "--n", "32", "--scale", "4", "--trials", "2"]) == EXIT_OK
        assert trigflop.main(["verify", "--kind", "fft", "--n", "32", "--scale", "2", "--trials", "2"]) == EXIT_OK
        assert trigflop.main(["verify", "--kind", "dct4", "--n", "32", "--scaled-output", "--trials", "2"]) == EXIT_OK

    def test_fft_defaults_to_fft_tolerance(self, capsys):
        assert trigflop.main(["verify", "--kind", "fft", "--n", "16", "--trials", "2"]) == EXIT_OK
        assert f" tol={config.FFT_TOLERANCE:.1e} " in capsys.readouterr().out

    def test_real_kinds_default_to_default_tolerance(self, capsys):
        assert trigflop.main(["verify", "--kind", "dct4", "--n", "16", "--trials", "2"]) == EXIT_OK
        assert f" tol={config.DEFAULT_TOLERANCE:.1e} " in capsys.readouterr().out

    def test_impossible_tolerance_fails(self, capsys):
        assert trigflop.main(["verify", "--kind", "dct4", "--n", "64", "--trials", "2", "--tol", "1e-30"]) == EXIT_CHECK_FAILED
        assert capsys.readouterr().out.strip().endswith("FAIL")

    def test_bad_trials(self):
        assert trigflop.main(["verify", "--kind", "dct4", "--n", "8", "--trials", "0"]) == EXIT_USAGE

    def test_errors_are_small(self):
        max_abs, max_rel = verify_errors("mdct", 128, 2, seed=5)
        assert 0.0 <= max_rel <= config.DEFAULT_TOLERANCE and max_abs < 1e-9


class TestAsymptoticCommand:
    def test_passes(self, capsys):
        assert trigflop.main(["asymptotic", "--n", "1024"]) == EXIT_OK
        line = capsys.readouterr().out.strip()
        assert line.startswith("kind=fft n=1024 ") and line.endswith("PASS")

    def test_uses_configured_size(self, monkeypatch, capsys):
        monkeypatch.setattr(config, "FFT_ASYMPTOTIC_N", 256)
        assert trigflop.main(["asymptotic"]) == EXIT_OK
        assert " n=256 " in capsys.readouterr().out

    def test_tight_slack_fails(self, capsys):
        assert trigflop.main(["asymptotic", "--n", "1024", "--slack", "1e-9"]) == EXIT_CHECK_FAILED
        assert capsys.readouterr().out.strip().endswith("FAIL")

    @pytest.mark.parametrize("n", ["3", "1"])
    def test_bad_size(self, n):
        assert trigflop.main(["asymptotic", "--n", n]) == EXIT_USAGE


class TestConfigOverrideFlag:
    def test_applies_override(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setattr(config, "DEFAULT_TRIALS", config.DEFAULT_TRIALS)
        path = tmp_path / "override.json"
        path.write_text(json.dumps({"DEFAULT_TRIALS": 2}))
        assert trigflop.main(["--config_override", str(path), "verify", "--kind", "dct4", "--n", "16"]) == EXIT_OK
        assert " trials=2 " in capsys.readouterr().out

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "override.json"
        path.write_text(json.dumps({"NO_SUCH_KEY": 1}))
        assert trigflop.main(["--config_override", str(path), "table"]) == EXIT_USAGE


class TestVectorFiles:
    def test_complex_json(self, tmp_path):
        path = tmp_path / "z.json"
        path.write_text("[[1, 2], 3]")
        np.testing.assert_array_equal(read_vector(str(path), 2, complex_values=True), [1 + 2j, 3])

    def test_blank_line_inside(self, tmp_path):
        path = tmp_path / "x.txt"
        path.write_text("1\n\n2\n")
        with pytest.raises(VectorFileError, match=":2"):
            read_vector(str(path), 2)

    def test_length_mismatch(self, tmp_path):
        path = tmp_path / "x.txt"
        path.write_text("1\n2\n")
        with pytest.raises(SizeMismatchError):
            read_vector(str(path), 4)

    def test_missing_file(self, tmp_path):
        with pytest.raises(VectorFileError):
            read_vector(str(tmp_path / "nope.txt"), 1)

    def test_full_precision(self):
        assert float(format_vector(np.array([0.1 + 0.2])).strip()) == 0.1 + 0.2
        assert format_vector(np.array([1 - 2j]), as_json=True) == "[[1, -2]]\n"

    def test_json_rejects_non_finite(self):
        with pytest.raises(VectorFileError, match="NaN or infinite"):
            format_vector(np.array([1.0, np.inf]), as_json=True)
        with pytest.raises(VectorFileError):
            format_vector(np.array([complex(0.0, np.nan)]), as_json=True)
        assert format_vector(np.array([np.nan, -np.inf])) == "nan\n-inf\n"

    def test_write_into_missing_directory(self, tmp_path):
        path = tmp_path / "missing" / "y.txt"
        with pytest.raises(VectorFileError, match="missing"):
            write_vector(np.array([1.0]), str(path))
