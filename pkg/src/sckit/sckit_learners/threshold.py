"""
Consistent ERM for one-dimensional threshold classifiers.

A threshold rule predicts 1[x >= theta] (orientation "up") or 1[x < theta]
(orientation "down"). The class has VC dimension 2. Constant labellings
use infinite thresholds.
"""

from typing import Optional

import numpy as np

from sckit.sckit_core.domain import Hypothesis, LabeledSample, TaskKind, as_points
from sckit.sckit_core.exceptions import ConsistencyImpossibleError, InvalidArgumentError

from .base import BaseERM

ORIENTATIONS = ("up", "down")


class ThresholdRule:
    """Binary classifier 1[x >= theta] or 1[x < theta]."""

    def __init__(self, theta: float, orientation: str = "up"):
        if orientation not in ORIENTATIONS:
            raise InvalidArgumentError(f"orientation must be one of {ORIENTATIONS}")
        self.theta = float(theta)
        self.orientation = orientation

    def __call__(self, X: np.ndarray) -> np.ndarray:
        x = as_points(X)[:, 0]
        if self.orientation == "up":
            return (x >= self.theta).astype(np.float64)
        return (x < self.theta).astype(np.float64)

    def __repr__(self) -> str:
        return f"ThresholdRule(theta={self.theta!r}, orientation={self.orientation!r})"


def _separating_threshold(below: np.ndarray, above: np.ndarray) -> Optional[float]:
    """A theta with max(below) < theta <= min(above), or None if the sets overlap."""
    if above.size == 0:
        return np.inf
    if below.size == 0:
        return -np.inf
    lo, hi = below.max(), above.min()
    if lo >= hi:
        return None
    theta = 0.5 * (lo + hi)
    if theta <= lo:
        # lo and hi are adjacent floats
        theta = hi
    return float(theta)


def threshold_erm(subsample: LabeledSample) -> Hypothesis:
    """
    Fit a threshold rule consistent with a binary subsample.

    The "up" orientation is tried first.

    Raises:
        ConsistencyImpossibleError: If no threshold separates the labels
    """
    if subsample.dim != 1:
        raise InvalidArgumentError("threshold ERM needs one-dimensional points")
    labels = subsample.labels
    if not np.all((labels == 0.0) | (labels == 1.0)):
        raise InvalidArgumentError("threshold ERM needs labels in {0, 1}")

    x = subsample.points[:, 0]
    zeros, ones = x[labels == 0.0], x[labels == 1.0]

    theta = _separating_threshold(zeros, ones)
    if theta is not None:
        return Hypothesis(ThresholdRule(theta, "up"), name=f"threshold(up,{theta:g})")
    theta = _separating_threshold(ones, zeros)
    if theta is not None:
        return Hypothesis(ThresholdRule(theta, "down"), name=f"threshold(down,{theta:g})")

    raise ConsistencyImpossibleError("labels are not separable by a threshold")


class ThresholdERM(BaseERM):
    """ERM oracle for threshold classifiers on the real line."""

    task = TaskKind.BINARY

    @property
    def identifier(self) -> str:
        return "threshold"

    def fit(self, subsample: LabeledSample) -> Hypothesis:
        return threshold_erm(subsample)
