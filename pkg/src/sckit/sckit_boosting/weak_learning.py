"""
Generic (eta, gamma)-weak learner built from a consistent ERM.

A subsample of bounded size is drawn i.i.d. from the current distribution
P over the training sample, the ERM interpolates it, and the resulting
hypothesis is kept if it errs by more than eta on P-mass at most
1/2 - gamma. Failed draws are retried with fresh subsamples.

The subsample size depends on the class only through its fat-shattering
dimension, never on the size of the training sample:

    m~ = ceil(c1 * (d(c2 * eta) * ln(c3 / eta) + ln(1 / delta)))
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.domain import EmpiricalDistribution, Hypothesis, LabeledSample
from sckit.sckit_core.exceptions import (
    ErmContractError,
    InvalidArgumentError,
    UnsupportedClassError,
    WeakLearningFailure,
)

logger = SCKitLogger.get_logger(__name__)

ERM = Callable[[LabeledSample], Hypothesis]

CONTRACT_TOLERANCE = 1e-12


class WeakLearnConfig(BaseModel):
    """Configuration of the generic weak learner."""

    model_config = ConfigDict(frozen=True)

    eta: float = Field(default=0.1, gt=0.0, le=1.0, description="Accuracy scale of the weak condition")
    gamma: float = Field(default=0.125, gt=0.0, lt=0.25, description="Required edge over 1/2")
    delta: float = Field(default=0.1, gt=0.0, lt=1.0, description="Per-draw failure probability")
    c1: float = Field(default=2.0, gt=0.0)
    c2: float = Field(default=0.125, gt=0.0)
    c3: float = Field(default=8.0, gt=0.0)
    fat_dim: Callable[[float], float] = Field(
        exclude=True, description="Fat-shattering dimension t -> d(t) of the ERM's class"
    )
    max_retries: NonNegativeInt = Field(default=64, description="Redraws after the first draw")
    alpha: float = Field(default=0.0, ge=0.0, lt=1.0, description="ERM consistency slack, in units of eta")


@dataclass(frozen=True)
class WeakCertificate:
    """Evidence that a hypothesis is (eta, gamma)-weak under a distribution."""

    subsample_indices: Tuple[int, ...]
    empirical_fail_mass: float
    attempts: int = 1


def _dimension(cfg: WeakLearnConfig, t: float) -> int:
    d = cfg.fat_dim(t)
    if d is None or (isinstance(d, float) and not math.isfinite(d)):
        raise UnsupportedClassError(f"class has infinite fat-shattering dimension at scale {t}")
    if d < 0:
        raise InvalidArgumentError(f"fat-shattering dimension must be nonnegative, got {d}")
    return int(d)


def _ceil(x: float) -> int:
    # round first so values like 2.9999999999999996 land on the intended integer
    return max(1, math.ceil(round(x, 9)))


def weak_sample_size(cfg: WeakLearnConfig) -> int:
    """
    Subsample size ceil(c1 * (d(c2 * eta) * ln(c3 / eta) + ln(1 / delta))).

    Raises:
        UnsupportedClassError: If the class's fat-shattering dimension is infinite
    """
    d = _dimension(cfg, cfg.c2 * cfg.eta)
    return _ceil(cfg.c1 * (d * math.log(cfg.c3 / cfg.eta) + math.log(1.0 / cfg.delta)))


def weak_sample_size_general(cfg: WeakLearnConfig, beta: Optional[float] = None) -> int:
    """
    Subsample size with an explicit failure mass beta and consistency slack alpha.

    ceil((c1 / beta) * (d(c2 * eta * beta * (1 - alpha)) * ln(c3 / (eta * beta * (1 - alpha)))
                        + ln(1 / delta)))

    Args:
        cfg: Weak learner configuration
        beta: Allowed failure mass, defaults to 1/2 - gamma
    """
    if beta is None:
        beta = 0.5 - cfg.gamma
    if not 0.0 < beta <= 1.0:
        raise InvalidArgumentError(f"beta must lie in (0, 1], got {beta}")
    scale = cfg.eta * beta * (1.0 - cfg.alpha)
    d = _dimension(cfg, cfg.c2 * scale)
    return _ceil(
        (cfg.c1 / beta) * (d * math.log(cfg.c3 / scale) + math.log(1.0 / cfg.delta))
    )


def draw_weighted_subsample(
    sample: LabeledSample, P: EmpiricalDistribution, n: int, rng: np.random.Generator
) -> np.ndarray:
    """
    Draw n indices i.i.d. from P, with replacement.

    Returns:
        Integer array of n positions into the sample
    """
    if n < 1:
        raise InvalidArgumentError("subsample size must be positive")
    if len(P) != len(sample):
        raise InvalidArgumentError(f"distribution has {len(P)} atoms for a sample of {len(sample)}")
    return rng.choice(len(P), size=n, replace=True, p=P.masses)


def verify_weak(
    h: Hypothesis,
    sample: LabeledSample,
    P: EmpiricalDistribution,
    eta: float,
    gamma: float,
) -> Tuple[bool, float]:
    """
    Check the (eta, gamma)-weak condition.

    Returns:
        (fail_mass <= 1/2 - gamma, fail_mass) where fail_mass is the P-mass of
        the points h misses by more than eta
    """
    errors = np.abs(h.predict(sample.points) - sample.labels) > eta
    fail_mass = P.mass(errors)
    return fail_mass <= 0.5 - gamma, fail_mass


def train_weak_hypothesis(
    sample: LabeledSample,
    P: EmpiricalDistribution,
    erm: ERM,
    cfg: WeakLearnConfig,
    rng: np.random.Generator,
) -> Tuple[Hypothesis, WeakCertificate]:
    """
    Train an (eta, gamma)-weak hypothesis under P.

    Args:
        sample: Training sample
        P: Current distribution over the sample
        erm: Consistent learner mapping a subsample to a hypothesis
        cfg: Weak learner configuration
        rng: Random generator for the subsample draws

    Returns:
        (hypothesis, certificate); the hypothesis's provenance is the drawn
        subsample, in draw order

    Raises:
        ErmContractError: If the ERM misses its own subsample by more than alpha * eta
        WeakLearningFailure: If 1 + max_retries draws all fail
    """
    size = weak_sample_size(cfg)
    slack = cfg.alpha * cfg.eta + CONTRACT_TOLERANCE
    best_fail = math.inf

    for attempt in range(1, cfg.max_retries + 2):
        indices = draw_weighted_subsample(sample, P, size, rng)
        subsample = sample.subsample(indices)
        h = erm(subsample)

        fit_error = float(np.max(np.abs(h.predict(subsample.points) - subsample.labels)))
        if fit_error > slack:
            raise ErmContractError(
                f"ERM misses its own subsample by {fit_error:.3g} (allowed {slack:.3g})"
            )

        ok, fail_mass = verify_weak(h, sample, P, cfg.eta, cfg.gamma)
        if ok:
            if attempt > 1:
                logger.debug(f"weak hypothesis found after {attempt} draws")
            certificate = WeakCertificate(
                subsample_indices=tuple(int(i) for i in indices),
                empirical_fail_mass=fail_mass,
                attempts=attempt,
            )
            return h.with_provenance(indices), certificate

        best_fail = min(best_fail, fail_mass)
        logger.debug(f"draw {attempt} failed: fail_mass={fail_mass:.6f}")

    attempts = cfg.max_retries + 1
    logger.warning(f"weak learner gave up after {attempts} draws (best fail mass {best_fail:.6f})")
    raise WeakLearningFailure(
        f"no ({cfg.eta}, {cfg.gamma})-weak hypothesis in {attempts} draws of size {size}",
        best_fail_mass=best_fail,
        attempts=attempts,
    )


class GenericWeakLearner:
    """
    Weak learner callable in the form MedBoost expects.

    ``eta`` and ``gamma`` passed at call time override those of the
    configuration, so one instance serves every round.
    """

    def __init__(self, erm: ERM, cfg: WeakLearnConfig):
        self.erm = erm
        self.cfg = cfg

    def __call__(
        self,
        sample: LabeledSample,
        P: EmpiricalDistribution,
        eta: float,
        gamma: float,
        rng: np.random.Generator,
    ) -> Tuple[Hypothesis, WeakCertificate]:
        cfg = self.cfg
        if cfg.eta != eta or cfg.gamma != gamma:
            cfg = cfg.model_copy(update={"eta": eta, "gamma": gamma})
        return train_weak_hypothesis(sample, P, self.erm, cfg, rng)
