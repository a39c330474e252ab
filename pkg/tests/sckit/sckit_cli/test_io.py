"""
Tests for the CLI file helpers.
"""

import json

import numpy as np
import pandas as pd
import pytest

from sckit.sckit_cli.io import load_sample_csv, save_sample_csv, write_metrics
from sckit.sckit_core.domain import LabeledSample, TaskKind
from sckit.sckit_core.exceptions import InvalidArgumentError


class TestSampleCsv:
    """Test cases for sample CSV files."""

    def test_round_trip_is_exact(self, temp_dir, rng):
        sample = LabeledSample(rng.uniform(size=(20, 3)), rng.uniform(size=20))
        path = temp_dir / "sample.csv"
        save_sample_csv(sample, path)
        loaded = load_sample_csv(path)
        assert np.array_equal(loaded.points, sample.points)
        assert np.array_equal(loaded.labels, sample.labels)
        assert path.read_text().splitlines()[0] == "x0,x1,x2,y"

    def test_binary_task(self, temp_dir, small_binary_sample):
        path = temp_dir / "sample.csv"
        save_sample_csv(small_binary_sample, path)
        assert load_sample_csv(path, task=TaskKind.BINARY).task is TaskKind.BINARY

    def test_missing_columns(self, temp_dir):
        path = temp_dir / "bad.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(InvalidArgumentError):
            load_sample_csv(path)

    def test_missing_file(self, temp_dir):
        with pytest.raises(InvalidArgumentError):
            load_sample_csv(temp_dir / "absent.csv")


class TestWriteMetrics:
    """Test cases for write_metrics."""

    rows = [{"m": 10, "k": 4, "passed": True}, {"m": 20, "k": 4, "passed": False}]
    config = {"task": "bv", "seed": 1}

    def test_csv(self, temp_dir):
        path = temp_dir / "out" / "metrics.csv"
        write_metrics(self.rows, self.config, path)
        frame = pd.read_csv(path)
        assert list(frame.columns) == ["m", "k", "passed", "config"]
        assert frame["m"].tolist() == [10, 20]
        assert json.loads(frame["config"][0]) == self.config

    def test_json(self, temp_dir):
        path = temp_dir / "metrics.json"
        write_metrics(self.rows, self.config, path, fmt="json")
        payload = json.loads(path.read_text())
        assert payload["config"] == self.config
        assert payload["rows"] == self.rows

    def test_stdout(self, capsys):
        write_metrics(self.rows, self.config)
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "m,k,passed,config"

    def test_unknown_format(self, temp_dir):
        with pytest.raises(InvalidArgumentError):
            write_metrics(self.rows, self.config, temp_dir / "x", fmt="xml")
