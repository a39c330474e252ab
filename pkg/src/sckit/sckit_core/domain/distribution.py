"""
Empirical distribution over sample indices.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..exceptions import InvalidArgumentError

MASS_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class EmpiricalDistribution:
    """Probability masses P(1..m) over the examples of a sample."""

    masses: np.ndarray

    def __post_init__(self):
        masses = np.array(self.masses, dtype=np.float64).reshape(-1)
        if masses.size == 0:
            raise InvalidArgumentError("a distribution needs at least one atom")
        if not np.all(np.isfinite(masses)) or np.any(masses < 0):
            raise InvalidArgumentError("masses must be finite and nonnegative")
        total = float(masses.sum())
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise InvalidArgumentError(f"masses must sum to 1 (got {total!r})")
        masses.setflags(write=False)
        object.__setattr__(self, "masses", masses)

    @classmethod
    def uniform(cls, m: int) -> "EmpiricalDistribution":
        """P_0: the uniform distribution over m indices."""
        if m < 1:
            raise InvalidArgumentError("m must be positive")
        return cls(np.full(m, 1.0 / m))

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> "EmpiricalDistribution":
        """Normalize nonnegative weights into a distribution."""
        w = np.asarray(weights, dtype=np.float64)
        total = w.sum()
        if not np.isfinite(total) or total <= 0:
            raise InvalidArgumentError("weights must have a positive finite total")
        return cls(w / total)

    def __len__(self) -> int:
        return self.masses.size

    def mass(self, mask: np.ndarray) -> float:
        """Total mass of the indices selected by a boolean mask."""
        return float(self.masses[np.asarray(mask, dtype=bool)].sum())

    def entropy(self) -> float:
        """Shannon entropy in nats."""
        p = self.masses[self.masses > 0]
        return float(-(p * np.log(p)).sum())
