"""
Tests for the CLI subcommands.
"""

import json

import numpy as np
import pandas as pd
import pytest

from sckit.sckit_cli import (
    ExperimentConfig,
    cmd_compress,
    cmd_duality,
    cmd_sweep,
    cmd_verify,
    cmd_weakstudy,
)
from sckit.sckit_cli.io import load_sample_csv, save_sample_csv
from sckit.sckit_compression import load_compression_set
from sckit.sckit_core.domain import LabeledSample, TaskKind
from sckit.sckit_core.exceptions import InvalidArgumentError


def threshold_config(out_dir, **kwargs):
    return ExperimentConfig(task="threshold", m=100, seed=11, output=str(out_dir), **kwargs)


class TestCompress:
    """Test cases for cmd_compress."""

    def test_artifacts_and_row(self, temp_dir):
        rows = cmd_compress(threshold_config(temp_dir))
        assert (temp_dir / "compression.mcsc").exists()
        assert (temp_dir / "sample.csv").exists()
        row = rows[0]
        assert row["passed"]
        assert row["max_error"] == 0.0
        assert row["k"] == row["n"] * 16
        assert row["side_info_bits"] <= row["side_info_bound"]
        assert row["file_bytes"] == (temp_dir / "compression.mcsc").stat().st_size
        assert "wall_time_s" not in row

        frame = pd.read_csv(temp_dir / "metrics.csv")
        config = json.loads(frame["config"][0])
        assert config["task"] == "threshold"
        assert config["seed"] == 11
        assert config["c_T"] == 2.0

    def test_rerun_is_byte_identical(self, temp_dir):
        cmd_compress(threshold_config(temp_dir / "a"))
        cmd_compress(threshold_config(temp_dir / "b"))
        for name in ("compression.mcsc", "sample.csv", "metrics.csv"):
            assert (temp_dir / "a" / name).read_bytes() == (temp_dir / "b" / name).read_bytes()

    def test_json_and_timing(self, temp_dir):
        cmd_compress(threshold_config(temp_dir, format="json", record_timing=True))
        payload = json.loads((temp_dir / "metrics.json").read_text())
        assert payload["config"]["format"] == "json"
        assert payload["rows"][0]["wall_time_s"] >= 0.0

    @pytest.mark.slow
    def test_bv_rerun_is_byte_identical(self, temp_dir):
        for name in ("a", "b"):
            cfg = ExperimentConfig(task="bv", m=200, eta=0.2, seed=7, output=str(temp_dir / name))
            assert cmd_compress(cfg)[0]["passed"]
        assert (temp_dir / "a" / "compression.mcsc").read_bytes() == (
            temp_dir / "b" / "compression.mcsc"
        ).read_bytes()


class TestVerify:
    """Test cases for cmd_verify."""

    @pytest.fixture
    def compressed(self, temp_dir):
        cmd_compress(threshold_config(temp_dir))
        return temp_dir / "compression.mcsc", temp_dir / "sample.csv"

    def test_training_sample_passes(self, compressed, temp_dir):
        cs_path, sample_path = compressed
        rows = cmd_verify(cs_path, sample_path, output=temp_dir / "verify.csv")
        assert rows[0]["passed"]
        assert rows[0]["n"] == load_compression_set(cs_path).n_groups
        config = json.loads(pd.read_csv(temp_dir / "verify.csv")["config"][0])
        assert config["erm_id"] == "threshold"

    def test_flipped_labels_fail_without_error(self, compressed, temp_dir):
        cs_path, sample_path = compressed
        sample = load_sample_csv(sample_path, task=TaskKind.BINARY)
        flipped = LabeledSample(sample.points, 1.0 - sample.labels, TaskKind.BINARY)
        save_sample_csv(flipped, temp_dir / "flipped.csv")
        rows = cmd_verify(cs_path, temp_dir / "flipped.csv", output=temp_dir / "v.csv")
        assert not rows[0]["passed"]
        assert rows[0]["max_error"] == 1.0

    def test_dimension_mismatch(self, compressed, temp_dir):
        cs_path, _ = compressed
        wide = LabeledSample(np.zeros((3, 2)), [0, 1, 0], TaskKind.BINARY)
        save_sample_csv(wide, temp_dir / "wide.csv")
        with pytest.raises(InvalidArgumentError):
            cmd_verify(cs_path, temp_dir / "wide.csv", output=temp_dir / "v.csv")


class TestWeakStudy:
    """Test cases for cmd_weakstudy."""

    def test_single_trial(self, temp_dir):
        cfg = ExperimentConfig(task="threshold", m=50, trials=1, output=str(temp_dir / "w.csv"))
        rows = cmd_weakstudy(cfg)
        assert len(rows) == 2
        assert rows[0]["trial"] == 0
        assert rows[1]["trial"] == "summary"
        assert 0.0 <= rows[1]["first_draw_failure_rate"] <= 1.0

    def test_reproducible_with_threads(self, temp_dir):
        base = dict(task="bv", m=100, eta=0.25, delta=0.2, trials=6, seed=4)
        serial = cmd_weakstudy(ExperimentConfig(output=str(temp_dir / "s.csv"), **base))
        threaded = cmd_weakstudy(
            ExperimentConfig(output=str(temp_dir / "t.csv"), workers=3, **base)
        )
        assert serial == threaded
        assert [r["trial"] for r in serial] == [0, 1, 2, 3, 4, 5, "summary"]

    def test_subsample_size_independent_of_m(self, temp_dir):
        sizes = {
            cmd_weakstudy(
                ExperimentConfig(task="threshold", m=m, output=str(temp_dir / f"{m}.csv"))
            )[0]["subsample_size"]
            for m in (50, 500)
        }
        assert sizes == {16}


class TestDuality:
    """Test cases for cmd_duality."""

    def test_bv_sandwich(self, temp_dir):
        cfg = ExperimentConfig(bv_ratios=[8, 16], output=str(temp_dir / "d.csv"))
        rows = cmd_duality(cfg)
        assert [r["dimension"] for r in rows] == [3, 4]
        assert all(r["holds"] for r in rows)

    def test_gray_rows(self, temp_dir):
        rows = cmd_duality(ExperimentConfig(gray_bits=[2, 4], output=str(temp_dir / "g.csv")))
        assert [(r["dimension"], r["transitions"]) for r in rows] == [(2, 3), (4, 15)]
        assert all(r["holds"] for r in rows)

    def test_lipschitz_rows(self, temp_dir):
        rows = cmd_duality(ExperimentConfig(lipschitz_ratios=[6, 12], output=str(temp_dir / "l.csv")))
        assert all(r["holds"] for r in rows)
        assert all(r["kind"] == "lipschitz" for r in rows)

    def test_single_point_packing_is_degenerate(self, temp_dir):
        """L/t = 1 on [0, 1] packs one point; the other ratios still run."""
        cfg = ExperimentConfig(lipschitz_ratios=[1, 6], output=str(temp_dir / "p.csv"))
        degenerate, regular = cmd_duality(cfg)
        assert degenerate["status"] == "degenerate"
        assert degenerate["dimension"] == 0
        assert degenerate["holds"] is None
        assert regular["status"] == "ok"
        assert regular["holds"]

    def test_budget_is_reported_per_row(self, temp_dir):
        cfg = ExperimentConfig(bv_ratios=[16], budget=1, output=str(temp_dir / "b.csv"))
        row = cmd_duality(cfg)[0]
        assert row["status"] == "budget_exceeded"
        assert row["holds"] is None

    def test_nothing_to_probe(self, temp_dir):
        with pytest.raises(InvalidArgumentError):
            cmd_duality(ExperimentConfig(output=str(temp_dir / "x.csv")))


class TestSweep:
    """Test cases for cmd_sweep."""

    def test_threshold_sizes(self, temp_dir):
        cfg = ExperimentConfig(
            task="threshold", m_values=[100, 400], seed=2, output=str(temp_dir / "s.csv")
        )
        rows = cmd_sweep(cfg)
        assert [r["m"] for r in rows] == [100, 400]
        assert all(r["passed"] for r in rows)
        assert all(r["k"] == r["n"] * 16 for r in rows)
