"""
SCKit Domain Package

Domain models shared by every sckit_* package:
- Definitions: TaskKind
- Models: LabeledSample, Hypothesis, WeightedEnsemble, EmpiricalDistribution
"""

# Domain definitions (enums)
from .task_kind import TaskKind

# Domain models (data classes)
from .labeled_sample import LabeledSample, as_points
from .hypothesis import Hypothesis
from .distribution import EmpiricalDistribution
from .ensemble import WeightedEnsemble, evaluate_members

__all__ = [
    # Definitions
    "TaskKind",
    # Models
    "LabeledSample",
    "Hypothesis",
    "WeightedEnsemble",
    "EmpiricalDistribution",
    # Helpers
    "as_points",
    "evaluate_members",
]
