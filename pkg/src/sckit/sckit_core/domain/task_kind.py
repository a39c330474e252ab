"""
Task kind definitions.

A compression scheme either approximates real-valued labels in [0, 1]
uniformly or reproduces binary labels exactly.
"""

from enum import Enum


class TaskKind(Enum):
    """
    Enumeration of learning tasks a LabeledSample can describe.

    - binary: labels in {0, 1}, hypotheses are classifiers
    - real: labels in [0, 1], hypotheses are regressors
    """

    BINARY = "binary"
    REAL = "real"

    @property
    def code(self) -> int:
        """Single-byte code used by the binary serialization format."""
        return 0 if self is TaskKind.BINARY else 1

    @classmethod
    def from_code(cls, code: int) -> "TaskKind":
        """Inverse of ``code``."""
        for kind in cls:
            if kind.code == code:
                return kind
        raise ValueError(f"Unknown task kind code: {code}")
