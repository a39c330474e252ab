"""
Exception hierarchy for SCKit.

Every error raised by the library derives from SCKitError and carries the
process exit code the CLI maps it to.
"""

from typing import Optional, Sequence, Tuple


class SCKitError(Exception):
    """Base class for all SCKit errors."""

    exit_code: int = 1


class InvalidArgumentError(SCKitError, ValueError):
    """An argument is outside the range an operation accepts."""

    exit_code = 2


class UnsupportedClassError(InvalidArgumentError):
    """The function class cannot be used here (e.g. infinite fat-shattering dimension)."""


class DecodeError(SCKitError, ValueError):
    """A serialized compression set or its side information is malformed."""

    exit_code = 3


class WeakLearningFailure(SCKitError, RuntimeError):
    """The weak learner exhausted its retry budget without an (eta, gamma)-weak hypothesis."""

    exit_code = 4

    def __init__(
        self,
        message: str,
        best_fail_mass: float,
        attempts: int,
        round_index: Optional[int] = None,
    ):
        super().__init__(message)
        self.best_fail_mass = best_fail_mass
        self.attempts = attempts
        self.round_index = round_index

    def with_round(self, round_index: int) -> "WeakLearningFailure":
        """Return a copy annotated with the boosting round it occurred in."""
        return WeakLearningFailure(
            f"round {round_index}: {self.args[0]}",
            best_fail_mass=self.best_fail_mass,
            attempts=self.attempts,
            round_index=round_index,
        )


class SparsifyFailure(SCKitError, RuntimeError):
    """Sparsify found no subsample whose median is eta-close on every point."""

    exit_code = 5

    def __init__(self, message: str, last_n: int):
        super().__init__(message)
        self.last_n = last_n


class BudgetExceededError(SCKitError, RuntimeError):
    """A combinatorial search hit its budget before finishing."""

    exit_code = 6

    def __init__(self, message: str, best_k: int):
        super().__init__(message)
        self.best_k = best_k


class ConsistencyImpossibleError(SCKitError, ValueError):
    """No member of the class interpolates the given labelled subsample."""

    exit_code = 7

    def __init__(self, message: str, pair: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.pair: Optional[Tuple[int, ...]] = tuple(pair) if pair is not None else None


class ErmContractError(SCKitError, RuntimeError):
    """An ERM returned a hypothesis that does not fit its own training subsample."""

    exit_code = 7


class WeakLearnerContractError(SCKitError, RuntimeError):
    """A weak hypothesis handed to MedBoost does not meet the weak-learning condition."""

    exit_code = 7


class NumericalError(SCKitError, ArithmeticError):
    """A numerical routine produced a degenerate result (e.g. a zero normalizer)."""

    exit_code = 1
