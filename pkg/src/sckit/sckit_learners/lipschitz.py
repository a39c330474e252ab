"""
Consistent ERM for L-Lipschitz functions.

The learner returns the midpoint of the McShane and Whitney extensions of
the subsample labels, clipped to [0, 1]. The midpoint extension is itself
L-Lipschitz and interpolates any L-Lipschitz-realizable subsample.
"""

from typing import Optional, Tuple

import numpy as np

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.domain import Hypothesis, LabeledSample, as_points
from sckit.sckit_core.exceptions import ConsistencyImpossibleError, InvalidArgumentError

from .base import BaseERM

logger = SCKitLogger.get_logger(__name__)

METRICS = {
    "euclidean": 2,
    "manhattan": 1,
    "chebyshev": np.inf,
}

REALIZABILITY_TOLERANCE = 1e-12

_CHUNK_ROWS = 2048


def pairwise_distances(A, B, metric: str = "euclidean") -> np.ndarray:
    """
    Distance matrix between two point sets.

    Args:
        A: Points of shape (n, d)
        B: Points of shape (k, d)
        metric: One of ``euclidean``, ``manhattan``, ``chebyshev``

    Returns:
        Array of shape (n, k)
    """
    if metric not in METRICS:
        raise InvalidArgumentError(f"Unknown metric: {metric}. Available: {sorted(METRICS)}")
    A = as_points(A)
    B = as_points(B)
    if A.shape[1] != B.shape[1]:
        raise InvalidArgumentError(f"dimension mismatch: {A.shape[1]} vs {B.shape[1]}")
    if A.shape[1] == 1:
        return np.abs(A - B.T)

    ord_ = METRICS[metric]
    out = np.empty((A.shape[0], B.shape[0]))
    for start in range(0, A.shape[0], _CHUNK_ROWS):
        block = A[start : start + _CHUNK_ROWS]
        out[start : start + block.shape[0]] = np.linalg.norm(
            block[:, None, :] - B[None, :, :], ord=ord_, axis=2
        )
    return out


class LipschitzExtension:
    """Midpoint of the upper and lower L-Lipschitz envelopes of labelled anchors."""

    def __init__(
        self,
        anchors: np.ndarray,
        values: np.ndarray,
        lipschitz_constant: float,
        metric: str = "euclidean",
        clip: Optional[Tuple[float, float]] = (0.0, 1.0),
    ):
        self.anchors = as_points(anchors)
        self.values = np.asarray(values, dtype=np.float64).reshape(-1)
        self.lipschitz_constant = float(lipschitz_constant)
        self.metric = metric
        self.clip = clip

    def __call__(self, X: np.ndarray) -> np.ndarray:
        D = pairwise_distances(X, self.anchors, self.metric)
        slack = self.lipschitz_constant * D
        upper = np.min(self.values[None, :] + slack, axis=1)
        lower = np.max(self.values[None, :] - slack, axis=1)
        out = 0.5 * (upper + lower)
        if self.clip is not None:
            out = np.clip(out, self.clip[0], self.clip[1])
        return out


def check_lipschitz_realizable(
    points,
    labels,
    lipschitz_constant: float,
    metric: str = "euclidean",
    tol: float = REALIZABILITY_TOLERANCE,
) -> None:
    """
    Check that |y_i - y_j| <= L * rho(x_i, x_j) for every pair.

    Raises:
        ConsistencyImpossibleError: With the offending pair of positions
    """
    X = as_points(points)
    y = np.asarray(labels, dtype=np.float64).reshape(-1)
    D = pairwise_distances(X, X, metric)
    excess = np.abs(y[:, None] - y[None, :]) - lipschitz_constant * D
    worst = int(np.argmax(excess))
    i, j = divmod(worst, len(y))
    if excess[i, j] > tol:
        raise ConsistencyImpossibleError(
            f"no {lipschitz_constant}-Lipschitz function fits examples {i} and {j}: "
            f"|{y[i]} - {y[j]}| > {lipschitz_constant} * {D[i, j]}",
            pair=(i, j),
        )


def lipschitz_erm(
    subsample: LabeledSample,
    lipschitz_constant: float,
    metric: str = "euclidean",
    clip: Optional[Tuple[float, float]] = (0.0, 1.0),
) -> Hypothesis:
    """
    Fit the midpoint Lipschitz extension to a subsample.

    Args:
        subsample: Labelled examples (repeats allowed)
        lipschitz_constant: L > 0
        metric: Metric on the instance space
        clip: Range the extension is clipped to, or None for no clipping

    Returns:
        Hypothesis interpolating the subsample

    Raises:
        ConsistencyImpossibleError: If the subsample is not L-Lipschitz realizable
    """
    if lipschitz_constant <= 0:
        raise InvalidArgumentError("Lipschitz constant must be positive")
    check_lipschitz_realizable(subsample.points, subsample.labels, lipschitz_constant, metric)
    evaluator = LipschitzExtension(
        subsample.points, subsample.labels, lipschitz_constant, metric=metric, clip=clip
    )
    return Hypothesis(evaluator, name=f"lipschitz(L={lipschitz_constant:g})")


class LipschitzERM(BaseERM):
    """ERM oracle for the class of L-Lipschitz functions into [0, 1]."""

    def __init__(self, lipschitz_constant: float, metric: str = "euclidean"):
        if lipschitz_constant <= 0:
            raise InvalidArgumentError("Lipschitz constant must be positive")
        if metric not in METRICS:
            raise InvalidArgumentError(f"Unknown metric: {metric}. Available: {sorted(METRICS)}")
        self.lipschitz_constant = float(lipschitz_constant)
        self.metric = metric

    @property
    def identifier(self) -> str:
        ident = f"lipschitz:L={self.lipschitz_constant!r}"
        if self.metric != "euclidean":
            ident += f",metric={self.metric}"
        return ident

    def fit(self, subsample: LabeledSample) -> Hypothesis:
        return lipschitz_erm(subsample, self.lipschitz_constant, self.metric)
