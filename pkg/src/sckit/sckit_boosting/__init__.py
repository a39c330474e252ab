"""
SCKit Boosting Package

MedBoost, the generic weak learner built from a consistent ERM, and the
Sparsify step that thins a boosted ensemble to an unweighted median.
"""

from .medboost import (
    BoostConfig,
    BoostTrace,
    RoundRecord,
    compute_alpha,
    compute_theta,
    run_medboost,
    update_distribution,
)
from .sparsify import (
    SparseEnsemble,
    SparsifyConfig,
    categorical_sample,
    sparsify,
    theorem_sparsify_size,
)
from .weak_learning import (
    GenericWeakLearner,
    WeakCertificate,
    WeakLearnConfig,
    draw_weighted_subsample,
    train_weak_hypothesis,
    verify_weak,
    weak_sample_size,
    weak_sample_size_general,
)

__all__ = [
    "BoostConfig",
    "BoostTrace",
    "GenericWeakLearner",
    "RoundRecord",
    "SparseEnsemble",
    "SparsifyConfig",
    "WeakCertificate",
    "WeakLearnConfig",
    "categorical_sample",
    "compute_alpha",
    "compute_theta",
    "draw_weighted_subsample",
    "run_medboost",
    "sparsify",
    "theorem_sparsify_size",
    "train_weak_hypothesis",
    "update_distribution",
    "verify_weak",
    "weak_sample_size",
    "weak_sample_size_general",
]
