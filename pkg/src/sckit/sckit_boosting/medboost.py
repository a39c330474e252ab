"""
MedBoost: boosting real-valued weak hypotheses into a weighted-median ensemble.

Each round asks the weak learner for a hypothesis that is eta/2-accurate on
P_t-mass at least 1/2 + gamma, weighs it by

    alpha_t = 1/2 * ln((1 - gamma) * W+ / ((1 + gamma) * W-))

where W+ / W- are the P_t-masses of the points it gets within / outside
eta/2, and shifts mass towards the points it got wrong. After T rounds the
weighted quantiles Q+_{gamma/2} and Q-_{gamma/2} of the ensemble are both
within eta/2 of every training label.

Rounds are indexed 1..T, with one weak-learner call per round.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.domain import EmpiricalDistribution, Hypothesis, LabeledSample, WeightedEnsemble
from sckit.sckit_core.exceptions import (
    InvalidArgumentError,
    NumericalError,
    WeakLearnerContractError,
    WeakLearningFailure,
)

from .weak_learning import WeakCertificate

logger = SCKitLogger.get_logger(__name__)

WeakLearner = Callable[
    [LabeledSample, EmpiricalDistribution, float, float, np.random.Generator],
    Union[Hypothesis, Tuple[Hypothesis, WeakCertificate]],
]


class BoostConfig(BaseModel):
    """Configuration of a MedBoost run."""

    model_config = ConfigDict(frozen=True)

    rounds: Union[PositiveInt, Literal["auto"]] = Field(
        default="auto",
        description="Number of rounds T, or 'auto' for T = ceil(c_T * ln(m) / gamma^2)",
    )
    gamma: float = Field(default=0.125, gt=0.0, lt=0.25, description="Weak-learning edge")
    eta: float = Field(default=0.2, gt=0.0, le=1.0, description="Target accuracy")
    c_T: float = Field(default=2.0, gt=0.0, description="Constant of the automatic round rule")

    def resolve_rounds(self, m: int) -> int:
        """Number of rounds for a sample of size m."""
        if self.rounds != "auto":
            return int(self.rounds)
        if m < 1:
            raise InvalidArgumentError("sample size must be positive")
        return max(1, math.ceil(round(self.c_T * math.log(m) / self.gamma**2, 9)))


@dataclass(frozen=True)
class RoundRecord:
    """Diagnostics of one boosting round."""

    round_index: int
    alpha: float
    correct_mass: float
    distribution_entropy: float
    certificate: Optional[WeakCertificate] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "round": self.round_index,
            "alpha": self.alpha,
            "correct_mass": self.correct_mass,
            "distribution_entropy": self.distribution_entropy,
            "subsample_size": (
                None if self.certificate is None else len(self.certificate.subsample_indices)
            ),
            "attempts": None if self.certificate is None else self.certificate.attempts,
        }


@dataclass(frozen=True)
class BoostTrace:
    """Per-round records of a MedBoost run."""

    rounds: int
    records: Tuple[RoundRecord, ...] = field(default_factory=tuple)
    early_exit: bool = False

    def __len__(self) -> int:
        return len(self.records)

    @property
    def alphas(self) -> List[float]:
        return [r.alpha for r in self.records]

    @property
    def certificates(self) -> List[Optional[WeakCertificate]]:
        return [r.certificate for r in self.records]

    def to_records(self) -> List[Dict[str, Any]]:
        return [r.to_dict() for r in self.records]


def compute_theta(h: Hypothesis, sample: LabeledSample, eta: float) -> np.ndarray:
    """
    Signed accuracy indicators theta_i = 1 - 2 * 1[|h(x_i) - y_i| > eta/2].

    Returns:
        Integer array in {-1, +1}^m; the boundary |h - y| = eta/2 counts as +1
    """
    errors = np.abs(h.predict(sample.points) - sample.labels)
    return np.where(errors > eta / 2, -1, 1).astype(np.int8)


def compute_alpha(P: EmpiricalDistribution, theta: np.ndarray, gamma: float) -> float:
    """
    Round weight alpha = 1/2 * ln((1 - gamma) * W+ / ((1 + gamma) * W-)).

    Returns:
        A finite real, or +inf when W- = 0

    Raises:
        WeakLearnerContractError: If W+ = 0
    """
    theta = np.asarray(theta)
    if theta.shape != P.masses.shape:
        raise InvalidArgumentError(f"theta has shape {theta.shape}, P has {P.masses.shape}")
    w_plus = P.mass(theta > 0)
    w_minus = P.mass(theta < 0)
    if w_minus == 0.0:
        return math.inf
    if w_plus == 0.0:
        raise WeakLearnerContractError("hypothesis is eta/2-accurate on no mass at all")
    return 0.5 * math.log((1.0 - gamma) * w_plus / ((1.0 + gamma) * w_minus))


def update_distribution(
    P: EmpiricalDistribution, theta: np.ndarray, alpha: float
) -> EmpiricalDistribution:
    """
    Reweight P(i) by exp(-alpha * theta_i) and renormalize.

    Raises:
        InvalidArgumentError: If alpha is negative or infinite
        NumericalError: If every mass underflows
    """
    if not math.isfinite(alpha) or alpha < 0:
        raise InvalidArgumentError(f"alpha must be finite and nonnegative, got {alpha}")
    if alpha == 0.0:
        return P
    weights = P.masses * np.exp(-alpha * np.asarray(theta, dtype=np.float64))
    total = weights.sum()
    if not np.isfinite(total) or total <= 0.0:
        raise NumericalError("distribution update underflowed to zero mass")
    return EmpiricalDistribution(weights / total)


def _unpack(result) -> Tuple[Hypothesis, Optional[WeakCertificate]]:
    if isinstance(result, tuple):
        hypothesis, certificate = result
        return hypothesis, certificate
    return result, None


def run_medboost(
    sample: LabeledSample,
    weak_learner: WeakLearner,
    cfg: BoostConfig,
    rng: np.random.Generator,
) -> Tuple[WeightedEnsemble, BoostTrace]:
    """
    Run MedBoost on a sample.

    Args:
        sample: Training sample
        weak_learner: Callable (sample, P_t, eta/2, gamma, rng) returning a
            hypothesis, or a (hypothesis, certificate) pair, that is
            (eta/2, gamma)-weak under P_t
        cfg: Rounds, gamma and eta
        rng: Random generator handed to the weak learner

    Returns:
        (ensemble, trace). If a round's hypothesis is eta/2-accurate on every
        point with positive mass, the ensemble is T copies of it with unit
        weights and ``trace.early_exit`` is set.

    Raises:
        WeakLearningFailure: Annotated with the round it occurred in
        WeakLearnerContractError: If a weak hypothesis is not (eta/2, gamma)-weak
    """
    T = cfg.resolve_rounds(len(sample))
    P = EmpiricalDistribution.uniform(len(sample))
    hypotheses: List[Hypothesis] = []
    alphas: List[float] = []
    records: List[RoundRecord] = []

    logger.info(f"MedBoost: m={len(sample)}, T={T}, gamma={cfg.gamma}, eta={cfg.eta}")

    for t in range(1, T + 1):
        try:
            result = weak_learner(sample, P, cfg.eta / 2, cfg.gamma, rng)
        except WeakLearningFailure as e:
            logger.warning(f"Weak learner failed in round {t}: {e}")
            raise e.with_round(t) from e
        h, certificate = _unpack(result)

        theta = compute_theta(h, sample, cfg.eta)
        fail_mass = P.mass(theta < 0)
        if fail_mass > 0.5 - cfg.gamma:
            raise WeakLearnerContractError(
                f"round {t}: weak hypothesis errs by more than eta/2 on mass "
                f"{fail_mass:.6f} > 1/2 - gamma"
            )

        alpha = compute_alpha(P, theta, cfg.gamma)
        records.append(
            RoundRecord(
                round_index=t,
                alpha=alpha,
                correct_mass=P.mass(theta > 0),
                distribution_entropy=P.entropy(),
                certificate=certificate,
            )
        )
        logger.debug(f"round {t}: alpha={alpha:.6f}, fail_mass={fail_mass:.6f}")

        if math.isinf(alpha):
            logger.info(f"MedBoost: exact hypothesis in round {t}, returning {T} copies")
            ensemble = WeightedEnsemble((h,) * T, np.ones(T))
            return ensemble, BoostTrace(rounds=T, records=tuple(records), early_exit=True)

        hypotheses.append(h)
        alphas.append(alpha)
        P = update_distribution(P, theta, alpha)

    return WeightedEnsemble(tuple(hypotheses), np.asarray(alphas)), BoostTrace(
        rounds=T, records=tuple(records), early_exit=False
    )
