"""
Tests for the sckit command line entry point.
"""

import importlib
import json

import pytest

from sckit.sckit_cli import create_parser, main
from sckit.sckit_core.exceptions import (
    BudgetExceededError,
    ConsistencyImpossibleError,
    DecodeError,
    NumericalError,
    SparsifyFailure,
    WeakLearningFailure,
)

cli_main = importlib.import_module("sckit.sckit_cli.main")


def last_error(capsys):
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


class TestParser:
    """Test cases for create_parser."""

    def test_unset_flags_are_absent(self):
        args = create_parser().parse_args(["compress", "--m", "64"])
        assert args.m == 64
        assert not hasattr(args, "eta")

    def test_dashed_flags(self):
        args = create_parser().parse_args(
            ["sweep", "--m-values", "10", "20", "--c-T", "3", "--rounds", "auto", "--record-timing"]
        )
        assert args.m_values == [10, 20]
        assert args.c_T == 3.0
        assert args.rounds == "auto"
        assert args.record_timing is True

    def test_rounds_integer(self):
        assert create_parser().parse_args(["compress", "--rounds", "9"]).rounds == 9


class TestMain:
    """Test cases for main and its exit codes."""

    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as info:
            main(["compress", "--bogus"])
        assert info.value.code == 2

    def test_invalid_gamma(self, temp_dir, capsys):
        assert main(["compress", "--gamma", "0.3", "--output", str(temp_dir)]) == 2
        assert last_error(capsys)["exit_code"] == 2
        assert not (temp_dir / "compression.mcsc").exists()

    def test_nothing_to_probe(self, capsys):
        assert main(["duality"]) == 2
        assert last_error(capsys)["error"] == "InvalidArgumentError"

    def test_compress_then_verify(self, temp_dir):
        out = temp_dir / "run"
        argv = ["compress", "--task", "threshold", "--m", "80", "--seed", "5", "--output", str(out)]
        assert main(argv) == 0
        assert (
            main(
                [
                    "verify",
                    "--compression",
                    str(out / "compression.mcsc"),
                    "--sample",
                    str(out / "sample.csv"),
                    "--output",
                    str(temp_dir / "verify.json"),
                    "--format",
                    "json",
                ]
            )
            == 0
        )
        payload = json.loads((temp_dir / "verify.json").read_text())
        assert payload["rows"][0]["passed"] is True

    def test_truncated_compression_file(self, temp_dir, capsys):
        out = temp_dir / "run"
        assert main(["compress", "--task", "threshold", "--m", "60", "--output", str(out)]) == 0
        data = (out / "compression.mcsc").read_bytes()
        (out / "compression.mcsc").write_bytes(data[: len(data) // 2])
        code = main(
            ["verify", "--compression", str(out / "compression.mcsc"), "--sample", str(out / "sample.csv")]
        )
        assert code == 3
        assert last_error(capsys)["error"] == "DecodeError"

    def test_config_file_with_override(self, temp_dir):
        path = temp_dir / "cfg.json"
        path.write_text(json.dumps({"gray_bits": [3], "bv_ratios": [8]}))
        out = temp_dir / "d.json"
        assert main(["duality", "--config", str(path), "--bv-ratios", "--output", str(out), "--format", "json"]) == 0
        rows = json.loads(out.read_text())["rows"]
        assert [r["kind"] for r in rows] == ["gray"]

    @pytest.mark.parametrize(
        "error, code",
        [
            (DecodeError("bad"), 3),
            (WeakLearningFailure("no luck", best_fail_mass=0.6, attempts=65), 4),
            (SparsifyFailure("too dense", last_n=319), 5),
            (BudgetExceededError("slow", best_k=2), 6),
            (ConsistencyImpossibleError("clash", pair=(0, 1)), 7),
            (NumericalError("zero"), 1),
        ],
    )
    def test_error_exit_codes(self, error, code, monkeypatch, capsys):
        def failing(cfg):
            raise error

        monkeypatch.setattr(cli_main, "cmd_compress", failing)
        assert main(["compress"]) == code
        report = last_error(capsys)
        assert report == {"error": type(error).__name__, "exit_code": code, "message": str(error)}
