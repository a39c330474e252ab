"""
Greedy packings of finite point sets.
"""

from typing import Tuple

import numpy as np

from sckit.sckit_core.domain import as_points
from sckit.sckit_core.exceptions import InvalidArgumentError
from sckit.sckit_learners import pairwise_distances

PACKING_TOLERANCE = 1e-12


def packing_number_greedy(
    points, eps: float, metric: str = "euclidean"
) -> Tuple[int, np.ndarray]:
    """
    Greedy maximal eps-packing.

    Points are scanned in order and kept when they lie at distance >= eps
    from every point kept so far. Every dropped point is then within eps of
    the packing, so the packing is maximal.

    Args:
        points: Finite point list, shape (n, d) or (n,)
        eps: Separation, > 0
        metric: Metric name understood by ``pairwise_distances``

    Returns:
        (size of the packing, kept points)
    """
    if eps <= 0:
        raise InvalidArgumentError("eps must be positive")
    X = as_points(points)
    if X.shape[0] == 0:
        return 0, X
    kept = [0]
    for i in range(1, X.shape[0]):
        d = pairwise_distances(X[i : i + 1], X[kept], metric)[0]
        if np.all(d >= eps - PACKING_TOLERANCE):
            kept.append(i)
    return len(kept), X[kept]
