"""
Hypothesis model.

A Hypothesis wraps a deterministic, vectorised evaluator together with the
provenance of the subsample that trained it. Provenance is what lets a
compression scheme encode a hypothesis as sample indices.
"""

from dataclasses import dataclass, replace
from typing import Any, Callable, Optional, Sequence, Tuple

import numpy as np

from .labeled_sample import as_points

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class Hypothesis:
    """Evaluable real-valued (or binary) function handle."""

    evaluator: Evaluator  # maps an (n, d) array of points to an (n,) array of values
    provenance: Optional[Tuple[int, ...]] = None
    name: str = "hypothesis"

    def predict(self, points: Any) -> np.ndarray:
        """
        Evaluate the hypothesis at many points.

        Args:
            points: Array-like of shape (n, d), or (n,) for one-dimensional points

        Returns:
            Float array of shape (n,)
        """
        X = as_points(points)
        return np.asarray(self.evaluator(X), dtype=np.float64).reshape(-1)

    def __call__(self, point: Any) -> float:
        """Evaluate the hypothesis at a single point."""
        x = np.atleast_1d(np.asarray(point, dtype=np.float64)).reshape(1, -1)
        return float(self.predict(x)[0])

    def with_provenance(self, indices: Sequence[int]) -> "Hypothesis":
        """Return a copy recording the sample indices it was trained on."""
        return replace(self, provenance=tuple(int(i) for i in indices))

    def __repr__(self) -> str:
        size = "none" if self.provenance is None else len(self.provenance)
        return f"Hypothesis(name={self.name!r}, provenance_size={size})"
