"""
SCKit - Sample Compression Toolkit

Turns a consistent learner into a bounded-size sample compression scheme:
MedBoost, a generic weak learner, Sparsify, compress/reconstruct with a
binary format, and the combinatorics of dual fat-shattering dimensions.

Package name: sample-compression-toolkit
Import name: sckit
"""

# Subpackages are also importable at top level (e.g. `from sckit_core import SCKitLogger`).
import sys

from . import sckit_boosting, sckit_compression, sckit_core, sckit_duality, sckit_learners

sys.modules["sckit_core"] = sckit_core
sys.modules["sckit_learners"] = sckit_learners
sys.modules["sckit_boosting"] = sckit_boosting
sys.modules["sckit_compression"] = sckit_compression
sys.modules["sckit_duality"] = sckit_duality

from .sckit_compression import CompressionSet, compress, reconstruct  # noqa: E402
from .sckit_core import SCKitLogger  # noqa: E402
from .sckit_core.domain import Hypothesis, LabeledSample, TaskKind, WeightedEnsemble  # noqa: E402

__version__ = "0.1.0"

__all__ = [
    "CompressionSet",
    "Hypothesis",
    "LabeledSample",
    "SCKitLogger",
    "TaskKind",
    "WeightedEnsemble",
    "compress",
    "reconstruct",
]
