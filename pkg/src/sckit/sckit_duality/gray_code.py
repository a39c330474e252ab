"""
Binary matrices, their variation, and balanced Gray codes.

For an m x n binary matrix M, V(M, i) counts the adjacent row pairs
(j, j + 1), j = 1..m-1, that disagree in column i. G(M) sums these counts
and V(M) is their maximum. A Gray code listing all 2^n rows has G(M) = 2^n - 1,
so some column flips at least (2^n - 1) / n times. A balanced code keeps
every column at or below ceil(2^n / n).
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from sckit.sckit_core.exceptions import InvalidArgumentError, UnsupportedClassError

MAX_GRAY_CODE_BITS = 5


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """An m x n matrix over {0, 1}."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries)
        if entries.ndim != 2 or entries.shape[0] < 1:
            raise InvalidArgumentError("a binary matrix needs at least one row and two dimensions")
        if not np.all((entries == 0) | (entries == 1)):
            raise InvalidArgumentError("binary matrix entries must lie in {0, 1}")
        entries = entries.astype(np.uint8)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def rows(self) -> List[Tuple[int, ...]]:
        return [tuple(int(b) for b in row) for row in self.entries]


def matrix_variation(M: BinaryMatrix) -> Tuple[np.ndarray, int, int]:
    """
    Per-column flip counts, their sum G(M) and their maximum V(M).

    Adjacent pairs are counted non-cyclically: the last row is not compared
    with the first.
    """
    entries = M.entries
    per_column = (entries[1:] != entries[:-1]).sum(axis=0).astype(np.int64)
    if per_column.size == 0:
        return per_column, 0, 0
    return per_column, int(per_column.sum()), int(per_column.max())


def balanced_gray_code(n: int) -> BinaryMatrix:
    """
    A Gray code on n bits whose columns each flip at most ceil(2^n / n) times.

    Found by depth-first search from the all-zeros row, flipping the least
    used column first; ties go to the rightmost column. For n = 2 this is
    the reflected code 00, 01, 11, 10.

    Raises:
        UnsupportedClassError: If n is outside 1..5
    """
    if not 1 <= n <= MAX_GRAY_CODE_BITS:
        raise UnsupportedClassError(f"balanced Gray codes are built for 1 <= n <= 5, got {n}")

    size = 1 << n
    cap = math.ceil(size / n)
    counts = [0] * n
    visited = [False] * size
    path = [0]
    visited[0] = True

    def extend() -> bool:
        if len(path) == size:
            return True
        current = path[-1]
        # column i is bit n-1-i of the row's integer code
        order = sorted(range(n), key=lambda i: (counts[i], -i))
        for col in order:
            if counts[col] >= cap:
                continue
            nxt = current ^ (1 << (n - 1 - col))
            if visited[nxt]:
                continue
            visited[nxt] = True
            counts[col] += 1
            path.append(nxt)
            if extend():
                return True
            path.pop()
            counts[col] -= 1
            visited[nxt] = False
        return False

    if not extend():
        raise UnsupportedClassError(f"no balanced Gray code found for n={n}")

    entries = np.array([[(code >> (n - 1 - i)) & 1 for i in range(n)] for code in path])
    return BinaryMatrix(entries)


def enumeration_matrix(n: int, order: Optional[np.ndarray] = None) -> BinaryMatrix:
    """All 2^n rows of {0, 1}^n, in binary counting order or in a given order."""
    if n < 1:
        raise InvalidArgumentError("n must be positive")
    codes = np.arange(1 << n) if order is None else np.asarray(order)
    if sorted(codes.tolist()) != list(range(1 << n)):
        raise InvalidArgumentError("order must be a permutation of 0..2^n - 1")
    entries = (codes[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1
    return BinaryMatrix(entries)
