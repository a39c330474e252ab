"""
Base ERM class for consistent proper learners.

An ERM maps an ordered labelled subsample to a member of its class that
interpolates the subsample. ERMs must be deterministic functions of the
ordered subsample: a compression scheme reconstructs hypotheses by
re-running the ERM on the stored examples.
"""

from abc import ABC, abstractmethod

import numpy as np

from sckit.sckit_core.domain import Hypothesis, LabeledSample, TaskKind


class BaseERM(ABC):
    """Base class for consistent ERM oracles."""

    task: TaskKind = TaskKind.REAL

    @property
    @abstractmethod
    def identifier(self) -> str:
        """
        Stable identifier of the ERM and its class parameters.

        The identifier is written into serialized compression sets; the
        decoder passes it back to ``create_erm`` to rebuild the same oracle.
        """
        pass

    @abstractmethod
    def fit(self, subsample: LabeledSample) -> Hypothesis:
        """
        Return a hypothesis of the class that interpolates the subsample.

        Args:
            subsample: Ordered labelled examples (repeats allowed)

        Returns:
            Hypothesis h with h(x_i) = y_i for every example

        Raises:
            ConsistencyImpossibleError: If no member of the class is consistent
        """
        pass

    def __call__(self, subsample: LabeledSample) -> Hypothesis:
        return self.fit(subsample)

    @staticmethod
    def training_error(hypothesis: Hypothesis, subsample: LabeledSample) -> float:
        """Largest absolute error of a hypothesis on a subsample."""
        return float(np.max(np.abs(hypothesis.predict(subsample.points) - subsample.labels)))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.identifier!r})"
