"""
Random realizable targets and samples.

Every target returned here belongs to its class, so samples labelled by it
are realizable and the class ERM can always interpolate them.
"""

import numpy as np

from sckit.sckit_core.domain import Hypothesis, LabeledSample, TaskKind
from sckit.sckit_core.exceptions import InvalidArgumentError

from .bounded_variation import LeftStepFunction
from .lipschitz import LipschitzExtension, pairwise_distances
from .threshold import ThresholdRule


def random_bv_target(v: float, rng: np.random.Generator, n_jumps: int = 8) -> Hypothesis:
    """
    Random step function on [0, 1] with values in [0, 1] and variation at most v.

    Jump magnitudes come from stick-breaking the budget v with Beta(1, 2)
    fractions; a jump that would leave [0, 1] is reflected, then clipped.
    """
    if v <= 0:
        raise InvalidArgumentError("variation bound must be positive")
    if n_jumps < 0:
        raise InvalidArgumentError("n_jumps must be nonnegative")

    knots = np.concatenate([[0.0], np.sort(rng.uniform(0.0, 1.0, size=n_jumps))])
    values = np.empty(n_jumps + 1)
    values[0] = rng.uniform(0.0, 1.0)
    remaining = float(v)
    for j in range(1, n_jumps + 1):
        size = remaining * rng.beta(1.0, 2.0)
        remaining -= size
        step = size if rng.random() < 0.5 else -size
        nxt = values[j - 1] + step
        if not 0.0 <= nxt <= 1.0:
            nxt = values[j - 1] - step
        values[j] = min(1.0, max(0.0, nxt))
    return Hypothesis(LeftStepFunction(knots, values), name=f"bv_target(v={v:g})")


def random_lipschitz_target(
    L: float,
    rng: np.random.Generator,
    dim: int = 1,
    n_anchors: int = 16,
    metric: str = "euclidean",
) -> Hypothesis:
    """
    Random L-Lipschitz function [0, 1]^dim -> [0, 1].

    Anchors are uniform points; each anchor's label is drawn uniformly from
    the interval the already-labelled anchors leave feasible, and the result
    is their midpoint Lipschitz extension.
    """
    if L <= 0:
        raise InvalidArgumentError("Lipschitz constant must be positive")
    if n_anchors < 1 or dim < 1:
        raise InvalidArgumentError("n_anchors and dim must be positive")

    anchors = rng.uniform(0.0, 1.0, size=(n_anchors, dim))
    D = pairwise_distances(anchors, anchors, metric)
    labels = np.empty(n_anchors)
    for j in range(n_anchors):
        lo, hi = 0.0, 1.0
        if j:
            lo = max(lo, float(np.max(labels[:j] - L * D[j, :j])))
            hi = min(hi, float(np.min(labels[:j] + L * D[j, :j])))
        labels[j] = rng.uniform(lo, hi) if lo < hi else lo
    return Hypothesis(
        LipschitzExtension(anchors, labels, L, metric=metric), name=f"lipschitz_target(L={L:g})"
    )


def random_threshold_target(rng: np.random.Generator) -> Hypothesis:
    """Threshold rule with theta ~ U(0.2, 0.8) and a random orientation."""
    theta = rng.uniform(0.2, 0.8)
    orientation = "up" if rng.random() < 0.5 else "down"
    return Hypothesis(ThresholdRule(theta, orientation), name=f"threshold_target({orientation})")


def draw_sample(
    target: Hypothesis,
    m: int,
    rng: np.random.Generator,
    dim: int = 1,
    task: TaskKind = TaskKind.REAL,
) -> LabeledSample:
    """
    Draw m points uniformly from [0, 1]^dim and label them with the target.

    Args:
        target: Labelling function
        m: Sample size
        rng: Random generator
        dim: Dimension of the instance space
        task: Task kind recorded on the sample

    Returns:
        LabeledSample of size m
    """
    if m < 1:
        raise InvalidArgumentError("sample size must be positive")
    points = rng.uniform(0.0, 1.0, size=(m, dim))
    labels = target.predict(points)
    if task is TaskKind.REAL:
        labels = np.clip(labels, 0.0, 1.0)
    return LabeledSample(points, labels, task)
