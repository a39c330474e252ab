"""
Function classes the pipeline can compress.

A concept class bundles its ERM oracle with its primal and dual
fat-shattering dimension functions, which is everything the weak learner
and the sparsifier need to size their subsamples.
"""

from dataclasses import dataclass

from sckit.sckit_core.domain import TaskKind
from sckit.sckit_core.exceptions import InvalidArgumentError

from .base import BaseERM
from .bounded_variation import BVERM
from .complexity import (
    DUAL_VC_DIM_THRESHOLD,
    VC_DIM_THRESHOLD,
    dual_dim_bv,
    dual_dim_lipschitz,
    fat_dim_bv,
    fat_dim_lipschitz,
)
from .lipschitz import METRICS, LipschitzERM
from .threshold import ThresholdERM


@dataclass(frozen=True)
class LipschitzClass:
    """L-Lipschitz functions from a metric space of diameter ``diam`` into [0, 1]."""

    L: float
    metric: str = "euclidean"
    diam: float = 1.0
    ddim: float = 1.0
    c: float = 1.0

    task = TaskKind.REAL

    def __post_init__(self):
        if self.L <= 0 or self.diam <= 0 or self.c <= 0:
            raise InvalidArgumentError("L, diam and c must be positive")
        if self.ddim < 0:
            raise InvalidArgumentError("doubling dimension must be nonnegative")
        if self.metric not in METRICS:
            raise InvalidArgumentError(f"Unknown metric: {self.metric}")

    def erm(self) -> BaseERM:
        return LipschitzERM(self.L, metric=self.metric)

    def fat_dim(self, t: float) -> int:
        return fat_dim_lipschitz(self.L, self.diam, self.ddim, t, self.c)

    def dual_dim(self, t: float) -> int:
        return dual_dim_lipschitz(self.L, self.diam, self.ddim, t)


@dataclass(frozen=True)
class BVClass:
    """Functions [0, 1] -> [0, 1] with total variation at most v."""

    v: float

    task = TaskKind.REAL

    def __post_init__(self):
        if self.v <= 0:
            raise InvalidArgumentError("variation bound must be positive")

    def erm(self) -> BaseERM:
        return BVERM(self.v)

    def fat_dim(self, t: float) -> int:
        return fat_dim_bv(self.v, t)

    def dual_dim(self, t: float) -> int:
        return dual_dim_bv(self.v, t)


@dataclass(frozen=True)
class ThresholdClass:
    """Threshold classifiers on the real line (VC dimension 2)."""

    task = TaskKind.BINARY

    def erm(self) -> BaseERM:
        return ThresholdERM()

    def fat_dim(self, t: float) -> int:
        return VC_DIM_THRESHOLD

    def dual_dim(self, t: float) -> int:
        return DUAL_VC_DIM_THRESHOLD
