"""
Experiment configuration for the sckit command line.

A configuration is resolved from defaults, then an optional JSON file,
then explicit command-line flags. The resolved configuration, including
defaulted constants, is written into every metrics file.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator

from sckit.sckit_boosting import BoostConfig, SparsifyConfig, WeakLearnConfig
from sckit.sckit_core.domain import TaskKind
from sckit.sckit_core.exceptions import InvalidArgumentError
from sckit.sckit_learners import BVClass, LipschitzClass, ThresholdClass

# MedBoost accuracy on the binary path: theta then means "classified correctly".
BINARY_BOOST_ETA = 1.0


class ExperimentConfig(BaseModel):
    """All parameters of one CLI run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    task: Literal["bv", "lipschitz", "threshold"] = "bv"
    v: float = Field(default=1.0, gt=0.0, description="Variation bound of the BV class")
    L: float = Field(default=1.0, gt=0.0, description="Lipschitz constant")
    diam: float = Field(default=1.0, gt=0.0, description="Diameter of the instance space")
    ddim: float = Field(default=1.0, ge=0.0, description="Doubling dimension of the instance space")
    c_fat: float = Field(default=1.0, gt=0.0, description="Constant of the Lipschitz fat-shattering formula")
    dim: PositiveInt = Field(default=1, description="Dimension of sample points")
    n_jumps: NonNegativeInt = Field(default=8, description="Jumps of random BV targets")
    n_anchors: PositiveInt = Field(default=16, description="Anchors of random Lipschitz targets")

    m: PositiveInt = 200
    eta: float = Field(default=0.2, gt=0.0, le=1.0)
    gamma: float = Field(default=0.125, gt=0.0, lt=0.25)
    delta: float = Field(default=0.1, gt=0.0, lt=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    trials: PositiveInt = 1

    c1: float = Field(default=2.0, gt=0.0)
    c2: float = Field(default=0.125, gt=0.0)
    c3: float = Field(default=8.0, gt=0.0)
    c_T: float = Field(default=2.0, gt=0.0)
    rounds: Union[PositiveInt, Literal["auto"]] = "auto"
    max_retries: NonNegativeInt = 64
    alpha: float = Field(default=0.0, ge=0.0, lt=1.0)

    sparsify_policy: Literal["explicit", "theorem", "adaptive"] = "adaptive"
    sparsify_n: Optional[PositiveInt] = None
    max_trials_per_n: Optional[PositiveInt] = None

    m_values: List[PositiveInt] = Field(default_factory=lambda: [100, 1000, 10000])

    bv_ratios: List[float] = Field(default_factory=list, description="v/t values to probe")
    lipschitz_ratios: List[float] = Field(default_factory=list, description="L/t values to probe")
    gray_bits: List[PositiveInt] = Field(default_factory=list, description="Gray code sizes to probe")
    k_max: NonNegativeInt = 7
    budget: Optional[PositiveInt] = None
    extra_functions: NonNegativeInt = 0
    grid_size: PositiveInt = Field(default=201, description="Grid points the Lipschitz packing is drawn from")

    workers: Optional[PositiveInt] = None
    output: Optional[str] = None
    format: Literal["csv", "json"] = "csv"
    record_timing: bool = False

    @model_validator(mode="after")
    def _check_task(self) -> "ExperimentConfig":
        if self.task in ("bv", "threshold") and self.dim != 1:
            raise ValueError(f"task {self.task} needs dim = 1")
        if self.sparsify_policy == "explicit" and self.sparsify_n is None:
            raise ValueError("sparsify_policy 'explicit' needs sparsify_n")
        if any(r <= 4 for r in self.bv_ratios):
            raise ValueError("bv_ratios must exceed 4")
        if any(r <= 0 for r in self.lipschitz_ratios):
            raise ValueError("lipschitz_ratios must be positive")
        return self

    @classmethod
    def from_sources(
        cls, config_file: Optional[Union[str, Path]] = None, overrides: Optional[Dict[str, Any]] = None
    ) -> "ExperimentConfig":
        """Defaults, then the JSON file, then explicit overrides."""
        data: Dict[str, Any] = {}
        if config_file is not None:
            try:
                with open(config_file, "r", encoding="utf-8") as f:
                    loaded = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise InvalidArgumentError(f"cannot read config file {config_file}: {e}") from e
            if not isinstance(loaded, dict):
                raise InvalidArgumentError("config file must hold a JSON object")
            data.update(loaded)
        data.update({k: v for k, v in (overrides or {}).items() if v is not None})
        return cls(**data)

    @property
    def task_kind(self) -> TaskKind:
        return TaskKind.BINARY if self.task == "threshold" else TaskKind.REAL

    @property
    def boost_eta(self) -> float:
        """Accuracy MedBoost runs at: eta, or 1 on the binary path."""
        return BINARY_BOOST_ETA if self.task_kind is TaskKind.BINARY else self.eta

    def concept_class(self) -> Union[BVClass, LipschitzClass, ThresholdClass]:
        if self.task == "bv":
            return BVClass(self.v)
        if self.task == "lipschitz":
            return LipschitzClass(self.L, diam=self.diam, ddim=self.ddim, c=self.c_fat)
        return ThresholdClass()

    def boost_config(self) -> BoostConfig:
        return BoostConfig(rounds=self.rounds, gamma=self.gamma, eta=self.boost_eta, c_T=self.c_T)

    def weak_config(self, eta: Optional[float] = None) -> WeakLearnConfig:
        """Weak learner configuration at accuracy eta (default: half the boosting eta)."""
        return WeakLearnConfig(
            eta=self.boost_eta / 2 if eta is None else eta,
            gamma=self.gamma,
            delta=self.delta,
            c1=self.c1,
            c2=self.c2,
            c3=self.c3,
            fat_dim=self.concept_class().fat_dim,
            max_retries=self.max_retries,
            alpha=self.alpha,
        )

    def sparsify_config(self) -> SparsifyConfig:
        return SparsifyConfig(
            policy=self.sparsify_policy,
            n=self.sparsify_n,
            eta=self.boost_eta,
            gamma=self.gamma,
            max_trials_per_n=self.max_trials_per_n,
            max_workers=self.workers,
        )

    def resolved(self) -> Dict[str, Any]:
        """JSON-friendly dump of every field, defaults included."""
        return self.model_dump(mode="json")
