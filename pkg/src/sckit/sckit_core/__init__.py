"""
SCKit Core Package

Logging, the exception hierarchy, domain types and weighted median/quantile
aggregation for SCKit (sample-compression-toolkit).
"""

from .logging_config import SCKitLogger
from .aggregation import (
    ensemble_predict,
    unweighted_median,
    weighted_median,
    weighted_median_batch,
    weighted_quantile_lower,
    weighted_quantile_lower_batch,
    weighted_quantile_upper,
    weighted_quantile_upper_batch,
)

__all__ = [
    "SCKitLogger",
    "ensemble_predict",
    "unweighted_median",
    "weighted_median",
    "weighted_median_batch",
    "weighted_quantile_lower",
    "weighted_quantile_lower_batch",
    "weighted_quantile_upper",
    "weighted_quantile_upper_batch",
]
