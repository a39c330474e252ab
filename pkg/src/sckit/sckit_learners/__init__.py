"""
SCKit Learners Package

Consistent proper ERMs (Lipschitz extension, bounded-variation step
interpolation, thresholds), their complexity measures, the ERM factory and
random realizable targets.
"""

from .base import BaseERM
from .bounded_variation import BVERM, LeftStepFunction, bv_erm, total_variation
from .complexity import (
    DUAL_VC_DIM_THRESHOLD,
    VC_DIM_THRESHOLD,
    dual_dim_bv,
    dual_dim_lipschitz,
    fat_dim_bv,
    fat_dim_lipschitz,
)
from .concept_classes import BVClass, LipschitzClass, ThresholdClass
from .factory import create_erm
from .lipschitz import (
    LipschitzERM,
    LipschitzExtension,
    check_lipschitz_realizable,
    lipschitz_erm,
    pairwise_distances,
)
from .targets import draw_sample, random_bv_target, random_lipschitz_target, random_threshold_target
from .threshold import ThresholdERM, ThresholdRule, threshold_erm

__all__ = [
    "BaseERM",
    "BVERM",
    "BVClass",
    "DUAL_VC_DIM_THRESHOLD",
    "LeftStepFunction",
    "LipschitzClass",
    "LipschitzERM",
    "LipschitzExtension",
    "ThresholdClass",
    "ThresholdERM",
    "ThresholdRule",
    "VC_DIM_THRESHOLD",
    "bv_erm",
    "check_lipschitz_realizable",
    "create_erm",
    "draw_sample",
    "dual_dim_bv",
    "dual_dim_lipschitz",
    "fat_dim_bv",
    "fat_dim_lipschitz",
    "lipschitz_erm",
    "pairwise_distances",
    "random_bv_target",
    "random_lipschitz_target",
    "random_threshold_target",
    "threshold_erm",
    "total_variation",
]
