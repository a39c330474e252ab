"""
Labeled sample model.

A LabeledSample is the ordered input of a compression scheme. Positions are
stable identifiers: compression sets, weak certificates and hypothesis
provenance all refer to examples by their index in the sample.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidArgumentError
from .task_kind import TaskKind


def as_points(points: Any) -> np.ndarray:
    """
    Coerce points to a float64 array of shape (n, d).

    A 1-D input is read as n one-dimensional points; a scalar as a single point.
    """
    arr = np.array(points, dtype=np.float64)
    if arr.ndim == 0:
        return arr.reshape(1, 1)
    if arr.ndim == 1:
        return arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise InvalidArgumentError(f"points must be at most 2-D, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class LabeledSample:
    """Ordered list of (point, label) pairs."""

    points: np.ndarray
    labels: np.ndarray
    task: TaskKind = TaskKind.REAL

    def __post_init__(self):
        points = as_points(self.points)
        labels = np.array(self.labels, dtype=np.float64).reshape(-1)
        if len(labels) == 0:
            raise InvalidArgumentError("LabeledSample must be nonempty")
        if points.shape[0] != len(labels):
            raise InvalidArgumentError(
                f"{points.shape[0]} points but {len(labels)} labels"
            )
        if not np.all(np.isfinite(points)):
            raise InvalidArgumentError("point coordinates must be finite reals")
        if not np.all(np.isfinite(labels)):
            raise InvalidArgumentError("labels must be finite reals")
        if self.task is TaskKind.BINARY:
            if not np.all((labels == 0.0) | (labels == 1.0)):
                raise InvalidArgumentError("binary task labels must lie in {0, 1}")
        elif np.any(labels < 0.0) or np.any(labels > 1.0):
            raise InvalidArgumentError("real task labels must lie in [0, 1]")

        points.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_pairs(
        cls, pairs: Sequence[Tuple[Any, float]], task: TaskKind = TaskKind.REAL
    ) -> "LabeledSample":
        """Build a sample from an iterable of (point, label) pairs."""
        pairs = list(pairs)
        if not pairs:
            raise InvalidArgumentError("LabeledSample must be nonempty")
        points = np.vstack([np.atleast_1d(np.asarray(p, dtype=np.float64)) for p, _ in pairs])
        labels = [y for _, y in pairs]
        return cls(points=points, labels=labels, task=task)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, idx: int) -> Tuple[np.ndarray, float]:
        return self.points[idx], float(self.labels[idx])

    def __iter__(self) -> Iterator[Tuple[np.ndarray, float]]:
        for i in range(len(self)):
            yield self[i]

    @property
    def dim(self) -> int:
        """Dimension of the instance space."""
        return int(self.points.shape[1])

    def subsample(self, indices: Sequence[int]) -> "LabeledSample":
        """
        Select examples by index, keeping order and multiplicity.

        Args:
            indices: Positions into this sample (repeats allowed)

        Returns:
            New LabeledSample whose i-th example is this sample's indices[i]-th
        """
        idx = np.asarray(indices, dtype=np.int64)
        if idx.size == 0:
            raise InvalidArgumentError("cannot build an empty subsample")
        if idx.min() < 0 or idx.max() >= len(self):
            raise InvalidArgumentError(
                f"subsample index out of range for a sample of size {len(self)}"
            )
        return LabeledSample(self.points[idx], self.labels[idx], self.task)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "task": self.task.value,
            "points": self.points.tolist(),
            "labels": self.labels.tolist(),
        }
