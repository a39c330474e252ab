"""
Tests for ExperimentConfig.
"""

import json

import pytest
from pydantic import ValidationError

from sckit.sckit_cli import ExperimentConfig
from sckit.sckit_core.domain import TaskKind
from sckit.sckit_core.exceptions import InvalidArgumentError


class TestExperimentConfig:
    """Test cases for ExperimentConfig validation."""

    def test_defaults(self):
        cfg = ExperimentConfig()
        assert cfg.task == "bv"
        assert (cfg.m, cfg.eta, cfg.gamma, cfg.delta) == (200, 0.2, 0.125, 0.1)
        assert cfg.rounds == "auto"
        assert cfg.bv_ratios == []

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"gamma": 0.3},
            {"eta": 0.0},
            {"seed": -1},
            {"seed": 2**64},
            {"task": "parity"},
            {"task": "bv", "dim": 2},
            {"sparsify_policy": "explicit"},
            {"bv_ratios": [4.0]},
            {"lipschitz_ratios": [0.0]},
            {"unknown": 1},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            ExperimentConfig(**kwargs)

    def test_lipschitz_allows_higher_dimension(self):
        assert ExperimentConfig(task="lipschitz", dim=3).dim == 3

    def test_frozen(self):
        cfg = ExperimentConfig()
        with pytest.raises(ValidationError):
            cfg.m = 5


class TestFromSources:
    """Test cases for ExperimentConfig.from_sources."""

    def test_file_then_flags(self, temp_dir):
        path = temp_dir / "cfg.json"
        path.write_text(json.dumps({"task": "threshold", "m": 50, "seed": 3}))
        cfg = ExperimentConfig.from_sources(path, {"m": 80, "seed": None})
        assert (cfg.task, cfg.m, cfg.seed) == ("threshold", 80, 3)

    def test_missing_file(self, temp_dir):
        with pytest.raises(InvalidArgumentError):
            ExperimentConfig.from_sources(temp_dir / "absent.json")

    def test_not_an_object(self, temp_dir):
        path = temp_dir / "cfg.json"
        path.write_text("[1, 2]")
        with pytest.raises(InvalidArgumentError):
            ExperimentConfig.from_sources(path)


class TestDerivedConfigs:
    """Test cases for the library configurations built from an ExperimentConfig."""

    def test_binary_path(self):
        cfg = ExperimentConfig(task="threshold")
        assert cfg.task_kind is TaskKind.BINARY
        assert cfg.boost_eta == 1.0
        assert cfg.boost_config().eta == 1.0
        assert cfg.weak_config().eta == 0.5
        assert cfg.weak_config().fat_dim(0.1) == 2

    def test_real_path(self):
        cfg = ExperimentConfig(eta=0.3, c_T=1.5, rounds=12, workers=3, max_retries=5)
        assert cfg.boost_config().eta == 0.3
        assert cfg.boost_config().resolve_rounds(100) == 12
        assert cfg.weak_config().eta == 0.15
        assert cfg.weak_config(eta=0.3).eta == 0.3
        assert cfg.weak_config().max_retries == 5
        assert cfg.sparsify_config().max_workers == 3

    def test_concept_class(self):
        cls = ExperimentConfig(task="lipschitz", L=2.0, diam=1.0).concept_class()
        assert cls.erm().identifier == "lipschitz:L=2.0"

    def test_resolved_is_json(self):
        resolved = ExperimentConfig(task="threshold").resolved()
        assert json.loads(json.dumps(resolved)) == resolved
        assert resolved["task"] == "threshold"
        assert resolved["c1"] == 2.0
