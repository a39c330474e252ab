"""
Explicit families shattered in the dual sense.

Both constructions give functions taking the values +t and -t, keyed to a
binary code on a set of points, so that the points t-shatter the functions
with the zero offset. The returned table has the functions as rows; the
certificate refers to its transpose, where the functions are columns.
"""

import math
from typing import Optional, Tuple

import numpy as np

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.domain import as_points
from sckit.sckit_core.exceptions import InvalidArgumentError, NumericalError
from sckit.sckit_learners import pairwise_distances, random_bv_target, total_variation

from .function_table import FunctionTable
from .gray_code import balanced_gray_code
from .shattering import ShatteringCertificate, is_t_shattered

logger = SCKitLogger.get_logger(__name__)

PACKING_TOLERANCE = 1e-12


def _signed_table(bits: np.ndarray, t: float, points: np.ndarray, prefix: str) -> FunctionTable:
    """Table with f_i(x_j) = +t where bits[j, i] = 1 and -t otherwise."""
    values = np.where(bits.T == 1, t, -t).astype(np.float64)
    names = tuple(f"{prefix}{i}" for i in range(values.shape[0]))
    return FunctionTable(values=values, points=points, row_names=names)


def _zero_offset_certificate(table: FunctionTable, t: float) -> ShatteringCertificate:
    dual = table.transpose()
    cert = is_t_shattered(dual, range(table.n_functions), t, offsets=np.zeros(table.n_functions))
    if cert is None:
        raise NumericalError("constructed family is not shattered with the zero offset")
    return cert


def bv_shattered_family(v: float, t: float) -> Tuple[FunctionTable, ShatteringCertificate]:
    """
    n = floor(log2(v / t)) step functions of variation at most v, dual t-shattered.

    Rows of a balanced Gray code on n bits are assigned to the grid points
    x_j = j / 2^n, j = 1..2^n, and f_i(x_j) = +t or -t according to bit i of
    row j. Each f_i flips at most ceil(2^n / n) times, so its variation
    2t * V(M, i) stays below v whenever 4t < v.

    Raises:
        InvalidArgumentError: If 4t >= v
        UnsupportedClassError: If n exceeds the supported Gray code size
    """
    if t <= 0 or v <= 0:
        raise InvalidArgumentError("v and t must be positive")
    if not 4 * t < v:
        raise InvalidArgumentError(f"need 4t < v, got t={t}, v={v}")
    n = int(math.floor(round(math.log2(v / t), 9)))
    code = balanced_gray_code(n)
    grid = np.arange(1, 2**n + 1, dtype=np.float64) / 2**n
    table = _signed_table(code.entries, t, grid, prefix="bv")

    for i, row in enumerate(table.values):
        if total_variation(row) > v:
            raise NumericalError(f"function {i} has variation {total_variation(row)} > {v}")
    logger.debug(f"BV family: n={n} functions on {2**n} grid points")
    return table, _zero_offset_certificate(table, t)


def dual_bv_table(
    v: float,
    t: float,
    extra_functions: int = 0,
    rng: Optional[np.random.Generator] = None,
) -> FunctionTable:
    """
    Dual table of the BV construction, optionally with random BV(v) functions added.

    Rows are the grid points, columns the functions; extra functions are
    random step functions of variation at most v evaluated on the grid.
    """
    table, _ = bv_shattered_family(v, t)
    if extra_functions > 0:
        if rng is None:
            raise InvalidArgumentError("extra functions need a random generator")
        extras = [random_bv_target(v, rng).predict(table.points) for _ in range(extra_functions)]
        table = table.add_rows(np.vstack(extras))
    return table.transpose()


def lipschitz_shattered_family(
    packing, L: float, t: float, metric: str = "euclidean"
) -> Tuple[FunctionTable, ShatteringCertificate]:
    """
    floor(log2 m) functions on an m-point 2t/L-packing, dual t-shattered.

    Point j carries the binary code of j mod 2^k with k = floor(log2 m),
    which uses every pattern at least once. Any two values differ by at
    most 2t <= L * distance, so each function is L-Lipschitz on the
    packing and extends to the whole space by ``lipschitz_erm``.

    Raises:
        InvalidArgumentError: With the offending pair, if two points are closer than 2t/L
    """
    if L <= 0 or t <= 0:
        raise InvalidArgumentError("L and t must be positive")
    X = as_points(packing)
    m = X.shape[0]
    if m < 2:
        raise InvalidArgumentError("a packing of at least two points is required")

    D = pairwise_distances(X, X, metric)
    np.fill_diagonal(D, np.inf)
    i, j = np.unravel_index(np.argmin(D), D.shape)
    if D[i, j] < 2 * t / L - PACKING_TOLERANCE:
        raise InvalidArgumentError(
            f"points {i} and {j} are {D[i, j]:.6g} apart, less than 2t/L = {2 * t / L:.6g}"
        )

    k = int(math.floor(math.log2(m)))
    codes = np.arange(m) % (1 << k)
    bits = (codes[:, None] >> np.arange(k - 1, -1, -1)[None, :]) & 1
    table = _signed_table(bits, t, X, prefix="lip")
    return table, _zero_offset_certificate(table, t)
