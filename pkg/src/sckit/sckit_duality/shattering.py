"""
Brute-force fat-shattering on finite function tables.

A set of columns (points) is t-shattered when some offset vector r makes
every above/below pattern b in {0, 1}^k realizable by a row (function):
value >= r_i + t where b_i = 1 and value <= r_i - t where b_i = 0.
Running the same search on ``table.transpose()`` measures the dual class.

Offsets are searched over midpoints (a + b) / 2 of a column value a and
the smallest column value b >= a + 2t. Any working offset can be moved to
one of these without losing a witness, so the search is exact.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.exceptions import BudgetExceededError, InvalidArgumentError

from .function_table import FunctionTable

logger = SCKitLogger.get_logger(__name__)

MAX_CANDIDATE_SIZE = 20

# Margin comparisons absorb rounding in r +- t.
TOLERANCE = 1e-12

Pattern = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ShatteringCertificate:
    """Columns, offsets and one witness row per pattern."""

    shattered_indices: Tuple[int, ...]
    offsets: np.ndarray
    witnesses: Dict[Pattern, int] = field(default_factory=dict)
    t: float = 0.0

    @property
    def k(self) -> int:
        return len(self.shattered_indices)

    def validate(self, table: FunctionTable) -> bool:
        """Re-check every pattern's witness against the table."""
        if self.k == 0:
            return True
        if len(self.witnesses) != 2**self.k:
            return False
        cols = list(self.shattered_indices)
        r = np.asarray(self.offsets, dtype=np.float64)
        for pattern, row in self.witnesses.items():
            if len(pattern) != self.k or not 0 <= row < table.n_functions:
                return False
            b = np.asarray(pattern, dtype=bool)
            v = table.values[row, cols]
            if np.any(v[b] < r[b] + self.t - TOLERANCE) or np.any(
                v[~b] > r[~b] - self.t + TOLERANCE
            ):
                return False
        return True


def offset_candidates(column: np.ndarray, t: float) -> np.ndarray:
    """Midpoints of each value a and the smallest value >= a + 2t."""
    u = np.unique(column)
    j = np.searchsorted(u, u + 2 * t - TOLERANCE, side="left")
    has_partner = j < u.size
    return 0.5 * (u[has_partner] + u[j[has_partner]])


def _bits(column: np.ndarray, r: float, t: float) -> Tuple[np.ndarray, np.ndarray]:
    """(bit, defined) per row: bit 1 above r + t, bit 0 below r - t."""
    above = column >= r + t - TOLERANCE
    below = column <= r - t + TOLERANCE
    return above.astype(np.int64), above | below


def _check_offsets(
    table: FunctionTable, cols: Sequence[int], t: float, offsets: np.ndarray
) -> Optional[ShatteringCertificate]:
    codes = np.zeros(table.n_functions, dtype=np.int64)
    valid = np.ones(table.n_functions, dtype=bool)
    for c, r in zip(cols, offsets):
        bit, defined = _bits(table.values[:, c], float(r), t)
        codes = codes * 2 + bit
        valid &= defined
    return _certificate(cols, offsets, codes, valid, t)


def _certificate(
    cols: Sequence[int], offsets, codes: np.ndarray, valid: np.ndarray, t: float
) -> Optional[ShatteringCertificate]:
    k = len(cols)
    rows = np.flatnonzero(valid)
    found, first = np.unique(codes[rows], return_index=True)
    if found.size != 2**k:
        return None
    witnesses = {
        tuple((int(code) >> (k - 1 - i)) & 1 for i in range(k)): int(rows[f])
        for code, f in zip(found, first)
    }
    return ShatteringCertificate(
        shattered_indices=tuple(int(c) for c in cols),
        offsets=np.asarray(offsets, dtype=np.float64),
        witnesses=witnesses,
        t=t,
    )


def is_t_shattered(
    table: FunctionTable,
    candidate: Sequence[int],
    t: float,
    offsets: Optional[Sequence[float]] = None,
) -> Optional[ShatteringCertificate]:
    """
    Decide whether the rows of a table t-shatter a set of its columns.

    Args:
        table: Function table (rows are the witnesses)
        candidate: Column indices, at most 20 of them
        t: Margin, > 0
        offsets: Offset vector to check; searched when omitted

    Returns:
        A certificate, or None if the columns are not t-shattered
    """
    if t <= 0:
        raise InvalidArgumentError("margin t must be positive")
    cols = [int(c) for c in candidate]
    k = len(cols)
    if k > MAX_CANDIDATE_SIZE:
        raise InvalidArgumentError(f"at most {MAX_CANDIDATE_SIZE} candidates are supported")
    if any(not 0 <= c < table.n_points for c in cols):
        raise InvalidArgumentError("candidate column out of range")
    if k == 0:
        return ShatteringCertificate(shattered_indices=(), offsets=np.zeros(0), t=t)
    if len(set(cols)) < k or table.n_functions < 2**k:
        return None

    if offsets is not None:
        r = np.asarray(offsets, dtype=np.float64).reshape(-1)
        if r.size != k:
            raise InvalidArgumentError(f"{k} candidates but {r.size} offsets")
        return _check_offsets(table, cols, t, r)

    choices = [offset_candidates(table.values[:, c], t) for c in cols]

    def search(i: int, codes: np.ndarray, valid: np.ndarray, chosen: List[float]):
        if i == k:
            return _certificate(cols, chosen, codes, valid, t)
        for r in choices[i]:
            bit, defined = _bits(table.values[:, cols[i]], float(r), t)
            new_codes = codes * 2 + bit
            new_valid = valid & defined
            # every prefix pattern must already be present
            if np.unique(new_codes[new_valid]).size < 2 ** (i + 1):
                continue
            cert = search(i + 1, new_codes, new_valid, chosen + [float(r)])
            if cert is not None:
                return cert
        return None

    n = table.n_functions
    return search(0, np.zeros(n, dtype=np.int64), np.ones(n, dtype=bool), [])


def largest_shattered_set(
    table: FunctionTable,
    t: float,
    k_max: int,
    budget: Optional[int] = None,
) -> ShatteringCertificate:
    """
    Certificate for a largest t-shattered column set of size at most k_max.

    Sets of size k + 1 are grown from shattered sets of size k (subsets of a
    shattered set are shattered), and k never exceeds log2 of the row count.

    Raises:
        BudgetExceededError: After ``budget`` shattering checks, with the best k so far
    """
    if k_max < 0:
        raise InvalidArgumentError("k_max must be nonnegative")
    best = ShatteringCertificate(shattered_indices=(), offsets=np.zeros(0), t=t)
    limit = min(k_max, int(math.floor(math.log2(table.n_functions))) if table.n_functions else 0)
    checks = 0

    frontier: List[Tuple[int, ...]] = [()]
    for k in range(1, limit + 1):
        next_frontier: List[Tuple[int, ...]] = []
        found: Optional[ShatteringCertificate] = None
        for base in frontier:
            start = base[-1] + 1 if base else 0
            for c in range(start, table.n_points):
                if budget is not None and checks >= budget:
                    logger.warning(f"shattering search stopped after {checks} checks at k={best.k}")
                    raise BudgetExceededError(
                        f"budget of {budget} checks exhausted; best k so far {best.k}",
                        best_k=best.k,
                    )
                checks += 1
                cert = is_t_shattered(table, base + (c,), t)
                if cert is not None:
                    next_frontier.append(base + (c,))
                    if found is None:
                        found = cert
        if found is None:
            break
        best = found
        frontier = next_frontier
        logger.debug(f"k={k}: {len(frontier)} shattered sets")
    return best


def fat_shattering_dim(
    table: FunctionTable, t: float, k_max: int, budget: Optional[int] = None
) -> int:
    """
    Size of the largest column set the rows t-shatter, capped at k_max.

    The dual dimension is ``fat_shattering_dim(table.transpose(), t, k_max)``.
    """
    return largest_shattered_set(table, t, k_max, budget).k
