"""
Closed-form complexity measures of the supported classes.

Primal fat-shattering dimensions size the weak learner's subsamples; dual
dimensions size the sparsified ensemble under the "theorem" policy.
"""

import math

from sckit.sckit_core.exceptions import InvalidArgumentError

# Thresholds on the real line shatter two points (one orientation each).
VC_DIM_THRESHOLD = 2
# A point x acting on thresholds by evaluation can never realize (1, 0) on x1 < x2.
DUAL_VC_DIM_THRESHOLD = 1


def fat_dim_bv(v: float, t: float) -> int:
    """
    Fat-shattering dimension of BV(v) at scale t: 1 + floor(v / (2t)).

    Raises:
        InvalidArgumentError: If t <= 0 or v <= 0
    """
    if t <= 0:
        raise InvalidArgumentError(f"scale t must be positive, got {t}")
    if v <= 0:
        raise InvalidArgumentError(f"variation bound v must be positive, got {v}")
    return 1 + math.floor(v / (2 * t))


def fat_dim_lipschitz(L: float, diam: float, ddim: float, t: float, c: float = 1.0) -> int:
    """
    Fat-shattering dimension of L-Lipschitz functions at scale t, up to the constant c.

    Returns ceil(c * ceil(L * diam / t) ** ddim). A doubling dimension of 0
    gives 1 for every t.
    """
    if t <= 0 or L <= 0 or diam <= 0 or c <= 0:
        raise InvalidArgumentError("L, diam, t and c must be positive")
    if ddim < 0:
        raise InvalidArgumentError(f"doubling dimension must be nonnegative, got {ddim}")
    cells = math.ceil(round(L * diam / t, 9))
    return math.ceil(round(c * cells**ddim, 9))


def dual_dim_bv(v: float, t: float) -> int:
    """Upper bound 2 * log2(v / t) on the dual fat-shattering dimension of BV(v), at least 1."""
    if t <= 0 or v <= 0:
        raise InvalidArgumentError("v and t must be positive")
    if v <= t:
        return 1
    return max(1, math.ceil(round(2 * math.log2(v / t), 9)))


def dual_dim_lipschitz(L: float, diam: float, ddim: float, t: float) -> int:
    """
    Upper bound ceil(log2 M) on the dual dimension of L-Lipschitz functions.

    M is the packing number of a cube of side ``diam`` in dimension ``ddim``
    at separation 2t/L, bounded by (floor(L * diam / (2t)) + 1) ** ddim.
    """
    if t <= 0 or L <= 0 or diam <= 0:
        raise InvalidArgumentError("L, diam and t must be positive")
    per_axis = math.floor(round(L * diam / (2 * t), 9)) + 1
    packing = per_axis ** max(ddim, 0)
    return max(1, math.ceil(round(math.log2(packing), 9)))
