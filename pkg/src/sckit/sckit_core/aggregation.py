"""
Weighted median and weighted quantile aggregation.

The scalar functions implement the set-comprehension definitions literally:

    Median(y; a) = min{ y_j : sum_t a_t [y_j < y_t] / sum_t a_t < 1/2 }
    Q+_g(y; a)   = min{ y_j : sum_t a_t [y_j < y_t] / sum_t a_t < 1/2 - g }
    Q-_g(y; a)   = max{ y_j : sum_t a_t [y_j > y_t] / sum_t a_t < 1/2 - g }

Weights may be unnormalized. Comparisons are exact floating-point
comparisons. The ``*_batch`` variants evaluate the same definitions
column-wise over a (T, n) matrix of values, which is what ensembles need
when they are evaluated on a whole sample.
"""

from typing import TYPE_CHECKING, Any, Sequence, Tuple

import numpy as np

from .exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from .domain.ensemble import WeightedEnsemble


def _validate(values: Sequence[float], weights: Sequence[float]) -> Tuple[np.ndarray, np.ndarray, float]:
    v = np.asarray(values, dtype=np.float64).reshape(-1)
    w = np.asarray(weights, dtype=np.float64).reshape(-1)
    if v.size == 0:
        raise InvalidArgumentError("weighted aggregation needs at least one value")
    if v.size != w.size:
        raise InvalidArgumentError(f"{v.size} values but {w.size} weights")
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise InvalidArgumentError("weights must be finite and nonnegative")
    total = float(w.sum())
    if total <= 0:
        raise InvalidArgumentError("total weight must be positive")
    return v, w, total


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not 0.0 <= gamma <= 0.5:
        raise InvalidArgumentError(f"gamma must lie in [0, 1/2], got {gamma}")
    return gamma


def weighted_quantile_upper(values: Sequence[float], weights: Sequence[float], gamma: float) -> float:
    """
    Upper weighted quantile Q+_gamma.

    Args:
        values: y_1..y_T
        weights: nonnegative a_1..a_T, not all zero
        gamma: margin in [0, 1/2]

    Returns:
        The smallest value whose strictly-larger weight fraction is below 1/2 - gamma.
        At gamma = 1/2 the defining set is empty and the maximum value is returned.
    """
    gamma = _check_gamma(gamma)
    v, w, total = _validate(values, weights)
    if gamma == 0.5:
        return float(v.max())
    larger = (v[None, :] > v[:, None]).astype(np.float64) @ w
    return float(v[larger / total < 0.5 - gamma].min())


def weighted_quantile_lower(values: Sequence[float], weights: Sequence[float], gamma: float) -> float:
    """
    Lower weighted quantile Q-_gamma.

    Returns the largest value whose strictly-smaller weight fraction is below
    1/2 - gamma (the minimum value at gamma = 1/2).
    """
    gamma = _check_gamma(gamma)
    v, w, total = _validate(values, weights)
    if gamma == 0.5:
        return float(v.min())
    smaller = (v[None, :] < v[:, None]).astype(np.float64) @ w
    return float(v[smaller / total < 0.5 - gamma].max())


def weighted_median(values: Sequence[float], weights: Sequence[float]) -> float:
    """Weighted median, i.e. Q+_0. The result is always one of the input values."""
    return weighted_quantile_upper(values, weights, 0.0)


def unweighted_median(values: Sequence[float]) -> float:
    """Med(a_1..a_n) = Median(a_1..a_n; 1..1)."""
    v = np.asarray(values, dtype=np.float64).reshape(-1)
    return weighted_median(v, np.ones_like(v))


def _sorted_columns(matrix: Any, weights: Sequence[float]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    V = np.asarray(matrix, dtype=np.float64)
    if V.ndim == 1:
        V = V.reshape(-1, 1)
    w = np.asarray(weights, dtype=np.float64).reshape(-1)
    if V.shape[0] == 0:
        raise InvalidArgumentError("weighted aggregation needs at least one value")
    if V.shape[0] != w.size:
        raise InvalidArgumentError(f"{V.shape[0]} rows but {w.size} weights")
    if not np.all(np.isfinite(w)) or np.any(w < 0) or w.sum() <= 0:
        raise InvalidArgumentError("weights must be finite, nonnegative and not all zero")
    order = np.argsort(V, axis=0, kind="stable")
    Vs = np.take_along_axis(V, order, axis=0)
    Ws = w[order]
    return Vs, Ws, np.cumsum(Ws, axis=0)


def weighted_quantile_upper_batch(matrix: Any, weights: Sequence[float], gamma: float) -> np.ndarray:
    """
    Column-wise Q+_gamma of a (T, n) value matrix under one weight vector.

    Returns:
        Array of shape (n,)
    """
    gamma = _check_gamma(gamma)
    Vs, _, cum = _sorted_columns(matrix, weights)
    if gamma == 0.5:
        return Vs[-1].copy()
    T = Vs.shape[0]
    rows = np.arange(T)[:, None]
    is_end = np.ones_like(Vs, dtype=bool)
    is_end[:-1] = Vs[1:] != Vs[:-1]
    # index of the last entry of each run of equal values
    end_idx = np.where(is_end, rows, T)
    end_idx = np.minimum.accumulate(end_idx[::-1], axis=0)[::-1]
    total = cum[-1]
    larger = total - np.take_along_axis(cum, end_idx, axis=0)
    qualifies = larger / total < 0.5 - gamma
    first = np.argmax(qualifies, axis=0)
    return np.take_along_axis(Vs, first[None, :], axis=0)[0]


def weighted_quantile_lower_batch(matrix: Any, weights: Sequence[float], gamma: float) -> np.ndarray:
    """Column-wise Q-_gamma of a (T, n) value matrix under one weight vector."""
    gamma = _check_gamma(gamma)
    Vs, _, cum = _sorted_columns(matrix, weights)
    if gamma == 0.5:
        return Vs[0].copy()
    T = Vs.shape[0]
    rows = np.arange(T)[:, None]
    is_start = np.ones_like(Vs, dtype=bool)
    is_start[1:] = Vs[1:] != Vs[:-1]
    start_idx = np.maximum.accumulate(np.where(is_start, rows, 0), axis=0)
    cum_before = np.vstack([np.zeros((1, Vs.shape[1])), cum])
    smaller = np.take_along_axis(cum_before, start_idx, axis=0)
    qualifies = smaller / cum[-1] < 0.5 - gamma
    last = T - 1 - np.argmax(qualifies[::-1], axis=0)
    return np.take_along_axis(Vs, last[None, :], axis=0)[0]


def weighted_median_batch(matrix: Any, weights: Sequence[float]) -> np.ndarray:
    """Column-wise weighted median of a (T, n) value matrix."""
    return weighted_quantile_upper_batch(matrix, weights, 0.0)


def ensemble_predict(ensemble: "WeightedEnsemble", x: Any) -> float:
    """
    Weighted-median prediction of an ensemble at one point.

    Args:
        ensemble: Hypotheses h_1..h_T with weights a_1..a_T
        x: A single point

    Returns:
        Median(h_1(x), ..., h_T(x); a_1, ..., a_T)
    """
    values = [h(x) for h in ensemble.hypotheses]
    return weighted_median(values, ensemble.weights)
