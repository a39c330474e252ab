"""
Consistent ERM for functions of bounded variation on [0, 1].

The learner returns the left-continuous step interpolant of the subsample:
the value at x is the label of the largest training point <= x, or of the
smallest training point when x lies to the left of all of them. Its total
variation equals the variation of the sorted labels, which is the least a
consistent function can have.
"""

import numpy as np

from sckit.sckit_core.domain import Hypothesis, LabeledSample, as_points
from sckit.sckit_core.exceptions import ConsistencyImpossibleError, InvalidArgumentError

from .base import BaseERM

VARIATION_TOLERANCE = 1e-9
DUPLICATE_LABEL_TOLERANCE = 1e-12


def total_variation(values) -> float:
    """Sum of absolute consecutive differences of a value sequence."""
    v = np.asarray(values, dtype=np.float64).reshape(-1)
    return float(np.abs(np.diff(v)).sum())


class LeftStepFunction:
    """Piecewise-constant function with breakpoints at sorted knots."""

    def __init__(self, knots: np.ndarray, values: np.ndarray):
        self.knots = np.asarray(knots, dtype=np.float64).reshape(-1)
        self.values = np.asarray(values, dtype=np.float64).reshape(-1)

    def __call__(self, X: np.ndarray) -> np.ndarray:
        x = as_points(X)[:, 0]
        idx = np.searchsorted(self.knots, x, side="right") - 1
        return self.values[np.clip(idx, 0, self.knots.size - 1)]

    @property
    def variation(self) -> float:
        return total_variation(self.values)


def bv_erm(subsample: LabeledSample, variation_bound: float) -> Hypothesis:
    """
    Fit the left-step interpolant to a one-dimensional subsample.

    Repeated points must carry the same label (within 1e-12); they are merged.

    Args:
        subsample: Labelled examples on [0, 1]
        variation_bound: v > 0, the class's total-variation budget

    Returns:
        Hypothesis interpolating the subsample

    Raises:
        ConsistencyImpossibleError: If a point carries two labels or the
            interpolant's variation exceeds v
    """
    if variation_bound <= 0:
        raise InvalidArgumentError("variation bound must be positive")
    if subsample.dim != 1:
        raise InvalidArgumentError("bounded-variation ERM needs one-dimensional points")

    x = subsample.points[:, 0]
    y = subsample.labels
    order = np.argsort(x, kind="stable")
    xs, ys = x[order], y[order]

    knots, first = np.unique(xs, return_index=True)
    values = ys[first]
    group = np.searchsorted(knots, xs)
    spread = np.abs(ys - values[group])
    if spread.size and spread.max() > DUPLICATE_LABEL_TOLERANCE:
        bad = int(np.argmax(spread))
        pair = (int(order[first[group[bad]]]), int(order[bad]))
        raise ConsistencyImpossibleError(
            f"point {xs[bad]} carries labels {values[group[bad]]} and {ys[bad]}", pair=pair
        )

    variation = total_variation(values)
    if variation > variation_bound + VARIATION_TOLERANCE:
        raise ConsistencyImpossibleError(
            f"subsample needs variation {variation:.6g} > bound {variation_bound:g}"
        )
    return Hypothesis(LeftStepFunction(knots, values), name=f"bv(v={variation_bound:g})")


class BVERM(BaseERM):
    """ERM oracle for functions [0, 1] -> [0, 1] of total variation at most v."""

    def __init__(self, variation_bound: float):
        if variation_bound <= 0:
            raise InvalidArgumentError("variation bound must be positive")
        self.variation_bound = float(variation_bound)

    @property
    def identifier(self) -> str:
        return f"bv:v={self.variation_bound!r}"

    def fit(self, subsample: LabeledSample) -> Hypothesis:
        return bv_erm(subsample, self.variation_bound)
