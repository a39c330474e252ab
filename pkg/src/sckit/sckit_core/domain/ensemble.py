"""
Weighted ensemble model.

An ensemble predicts with the weighted median of its members; its weighted
quantiles expose the margin the boosting stage leaves around each label.
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from ..aggregation import (
    weighted_median_batch,
    weighted_quantile_lower_batch,
    weighted_quantile_upper_batch,
)
from ..exceptions import InvalidArgumentError
from .hypothesis import Hypothesis
from .labeled_sample import LabeledSample, as_points


def evaluate_members(hypotheses: Sequence[Hypothesis], points: Any) -> np.ndarray:
    """
    Evaluate every hypothesis at every point.

    Repeated hypothesis objects (e.g. the copies returned by an early boosting
    exit) are evaluated once.

    Returns:
        Array of shape (len(hypotheses), n)
    """
    X = as_points(points)
    cache: Dict[int, np.ndarray] = {}
    rows = []
    for h in hypotheses:
        key = id(h)
        if key not in cache:
            cache[key] = h.predict(X)
        rows.append(cache[key])
    return np.vstack(rows)


@dataclass(frozen=True, eq=False)
class WeightedEnsemble:
    """Hypotheses h_1..h_T with nonnegative weights a_1..a_T."""

    hypotheses: Tuple[Hypothesis, ...]
    weights: np.ndarray

    def __post_init__(self):
        hypotheses = tuple(self.hypotheses)
        weights = np.array(self.weights, dtype=np.float64).reshape(-1)
        if len(hypotheses) == 0:
            raise InvalidArgumentError("an ensemble needs at least one hypothesis")
        if len(hypotheses) != weights.size:
            raise InvalidArgumentError(
                f"{len(hypotheses)} hypotheses but {weights.size} weights"
            )
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise InvalidArgumentError("ensemble weights must be finite and nonnegative")
        if not np.any(weights > 0):
            raise InvalidArgumentError("at least one ensemble weight must be positive")
        weights.setflags(write=False)
        object.__setattr__(self, "hypotheses", hypotheses)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.hypotheses)

    @property
    def normalized_weights(self) -> np.ndarray:
        """Weights divided by their sum (the categorical distribution Sparsify samples from)."""
        return self.weights / self.weights.sum()

    def evaluate(self, points: Any) -> np.ndarray:
        """Member predictions, shape (T, n)."""
        return evaluate_members(self.hypotheses, points)

    def predict(self, points: Any) -> np.ndarray:
        """Weighted-median prediction at each point."""
        return weighted_median_batch(self.evaluate(points), self.weights)

    def quantile_upper(self, points: Any, gamma: float) -> np.ndarray:
        """Q+_gamma at each point."""
        return weighted_quantile_upper_batch(self.evaluate(points), self.weights, gamma)

    def quantile_lower(self, points: Any, gamma: float) -> np.ndarray:
        """Q-_gamma at each point."""
        return weighted_quantile_lower_batch(self.evaluate(points), self.weights, gamma)

    def margin_violations(self, sample: LabeledSample, gamma: float, eta: float) -> np.ndarray:
        """
        Indices where max(|Q+_{gamma/2}(x_i) - y_i|, |Q-_{gamma/2}(x_i) - y_i|) > eta/2.

        An empty result means the ensemble carries the margin the boosting
        guarantee promises on every training point.
        """
        values = self.evaluate(sample.points)
        upper = weighted_quantile_upper_batch(values, self.weights, gamma / 2)
        lower = weighted_quantile_lower_batch(values, self.weights, gamma / 2)
        worst = np.maximum(np.abs(upper - sample.labels), np.abs(lower - sample.labels))
        return np.flatnonzero(worst > eta / 2)
