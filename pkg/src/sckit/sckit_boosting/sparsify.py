"""
Sparsify: thin a weighted ensemble to n unweighted members.

Members are drawn i.i.d. from the categorical distribution of the boosting
weights; a draw is accepted when, at every training point, fewer than n/2
of the drawn members miss the label by more than eta. The unweighted median
of an accepted draw is then eta-accurate on the whole sample.

Under the adaptive policy the draw size starts at n0 and grows as
n <- 2n + 1 whenever ``max_trials_per_n`` draws in a row are rejected, up to
a hard cap of 4 * T * ceil(1 / gamma^2).
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.aggregation import weighted_median_batch
from sckit.sckit_core.domain import Hypothesis, LabeledSample, WeightedEnsemble, evaluate_members
from sckit.sckit_core.exceptions import InvalidArgumentError, SparsifyFailure

logger = SCKitLogger.get_logger(__name__)

DualDim = Callable[[float], float]


def _odd(n: int) -> int:
    return n if n % 2 == 1 else n + 1


class SparsifyConfig(BaseModel):
    """Configuration of a Sparsify run."""

    model_config = ConfigDict(frozen=True)

    policy: Literal["explicit", "theorem", "adaptive"] = "adaptive"
    n: Optional[PositiveInt] = Field(default=None, description="Draw size for the explicit policy")
    eta: float = Field(default=0.2, gt=0.0, description="Accuracy each accepted draw must keep")
    gamma: float = Field(default=0.125, gt=0.0, lt=0.25)
    n0: PositiveInt = Field(default=9, description="Initial draw size of the adaptive policy")
    delta_s: float = Field(default=0.01, gt=0.0, lt=1.0, description="Failure probability per draw size")
    max_trials_per_n: Optional[PositiveInt] = Field(
        default=None, description="Draws per size; defaults to ceil(log2(1 / delta_s))"
    )
    c_n: float = Field(default=1.0, gt=0.0, description="Leading constant of the theorem policy")
    c_eta: float = Field(default=0.125, gt=0.0, description="Scale constant of the theorem policy")
    max_workers: Optional[PositiveInt] = Field(
        default=None, description="Threads for evaluating the draws of one size"
    )

    @property
    def trials_per_n(self) -> int:
        if self.max_trials_per_n is not None:
            return int(self.max_trials_per_n)
        return max(1, math.ceil(round(math.log2(1.0 / self.delta_s), 9)))


@dataclass(frozen=True, eq=False)
class SparseEnsemble:
    """n unweighted hypotheses h_{J_1}..h_{J_n} predicting by their median."""

    hypotheses: Tuple[Hypothesis, ...]
    source_rounds: Tuple[int, ...]

    def __post_init__(self):
        if len(self.hypotheses) == 0:
            raise InvalidArgumentError("a sparse ensemble needs at least one hypothesis")
        if len(self.hypotheses) != len(self.source_rounds):
            raise InvalidArgumentError("one source round per hypothesis is required")

    def __len__(self) -> int:
        return len(self.hypotheses)

    def evaluate(self, points) -> np.ndarray:
        """Member predictions, shape (n, num_points)."""
        return evaluate_members(self.hypotheses, points)

    def predict(self, points) -> np.ndarray:
        """Unweighted median of the members at each point."""
        values = self.evaluate(points)
        return weighted_median_batch(values, np.ones(values.shape[0]))

    def failure_counts(self, sample: LabeledSample, eta: float) -> np.ndarray:
        """Per-point number of members missing the label by more than eta."""
        errors = np.abs(self.evaluate(sample.points) - sample.labels[None, :]) > eta
        return errors.sum(axis=0)

    def satisfies_majority(self, sample: LabeledSample, eta: float) -> bool:
        """True iff fewer than n/2 members miss any point by more than eta."""
        return bool(self.failure_counts(sample, eta).max() < len(self) / 2)


def categorical_sample(weights: Sequence[float], n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draw n indices i.i.d. from Cat(weights / sum(weights)).

    Raises:
        InvalidArgumentError: If the weights are negative or all zero
    """
    w = np.asarray(weights, dtype=np.float64).reshape(-1)
    if w.size == 0 or not np.all(np.isfinite(w)) or np.any(w < 0) or w.sum() <= 0:
        raise InvalidArgumentError("weights must be finite, nonnegative and not all zero")
    if n < 1:
        raise InvalidArgumentError("number of draws must be positive")
    return rng.choice(w.size, size=n, replace=True, p=w / w.sum())


def theorem_sparsify_size(
    gamma: float, eta: float, dual_dim: DualDim, c_n: float = 1.0, c_eta: float = 0.125
) -> int:
    """
    Draw size ceil(c_n / gamma^2 * d*(c_eta * eta) * ln(d*(c_eta * eta) / eta)^2), made odd.

    Args:
        gamma: Boosting edge
        eta: Accuracy the draw must keep
        dual_dim: Dual fat-shattering dimension t -> d*(t) of the class
        c_n: Leading constant
        c_eta: Scale constant
    """
    d_star = float(dual_dim(c_eta * eta))
    if not math.isfinite(d_star) or d_star < 0:
        raise InvalidArgumentError(f"dual dimension must be finite and nonnegative, got {d_star}")
    if d_star == 0:
        return 1
    n = c_n / gamma**2 * d_star * math.log(d_star / eta) ** 2
    return _odd(max(1, math.ceil(round(n, 9))))


def _error_matrix(ensemble: WeightedEnsemble, sample: LabeledSample, eta: float) -> np.ndarray:
    values = ensemble.evaluate(sample.points)
    return np.abs(values - sample.labels[None, :]) > eta


def _run_trial(
    errors: np.ndarray, probs: np.ndarray, n: int, rng: np.random.Generator
) -> Optional[np.ndarray]:
    draws = categorical_sample(probs, n, rng)
    multiplicity = np.bincount(draws, minlength=errors.shape[0])
    chosen = np.flatnonzero(multiplicity)
    counts = multiplicity[chosen] @ errors[chosen].astype(np.int64)
    if counts.max() < n / 2:
        return draws
    return None


def _try_size(
    errors: np.ndarray,
    probs: np.ndarray,
    n: int,
    trials: int,
    rng: np.random.Generator,
    max_workers: Optional[int],
) -> Optional[np.ndarray]:
    trial_rngs = rng.spawn(trials)
    if max_workers is not None and max_workers > 1 and trials > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            outcomes = list(
                executor.map(lambda g: _run_trial(errors, probs, n, g), trial_rngs)
            )
        return next((d for d in outcomes if d is not None), None)

    for trial_rng in trial_rngs:
        draws = _run_trial(errors, probs, n, trial_rng)
        if draws is not None:
            return draws
    return None


def sparsify(
    ensemble: WeightedEnsemble,
    sample: LabeledSample,
    cfg: SparsifyConfig,
    rng: np.random.Generator,
    dual_dim: Optional[DualDim] = None,
) -> SparseEnsemble:
    """
    Thin a boosted ensemble to an unweighted median of n members.

    Args:
        ensemble: Weighted ensemble returned by MedBoost on the same sample
        sample: Training sample
        cfg: Policy, eta and gamma
        rng: Random generator; every draw uses its own spawned sub-generator
        dual_dim: Dual dimension function, required by the theorem policy

    Returns:
        SparseEnsemble whose members pass the majority predicate

    Raises:
        SparsifyFailure: If no accepted draw is found within the policy's budget
    """
    errors = _error_matrix(ensemble, sample, cfg.eta)
    probs = ensemble.normalized_weights
    trials = cfg.trials_per_n
    T = len(ensemble)

    if cfg.policy == "explicit":
        if cfg.n is None:
            raise InvalidArgumentError("the explicit policy needs n")
        sizes: List[int] = [_odd(int(cfg.n))]
    elif cfg.policy == "theorem":
        if dual_dim is None:
            raise InvalidArgumentError("the theorem policy needs a dual dimension function")
        sizes = [theorem_sparsify_size(cfg.gamma, cfg.eta, dual_dim, cfg.c_n, cfg.c_eta)]
    else:
        cap = 4 * T * math.ceil(round(1.0 / cfg.gamma**2, 9))
        sizes = []
        n = _odd(int(cfg.n0))
        while n <= cap:
            sizes.append(n)
            n = 2 * n + 1
        if not sizes:
            sizes = [cap if cap % 2 else cap - 1]

    for n in sizes:
        draws = _try_size(errors, probs, n, trials, rng, cfg.max_workers)
        if draws is not None:
            logger.info(f"Sparsify: accepted n={n} from T={T} hypotheses")
            return SparseEnsemble(
                hypotheses=tuple(ensemble.hypotheses[j] for j in draws),
                source_rounds=tuple(int(j) for j in draws),
            )
        logger.debug(f"Sparsify: {trials} draws of size {n} rejected")

    logger.warning(f"Sparsify gave up at n={sizes[-1]}")
    raise SparsifyFailure(
        f"no draw of size <= {sizes[-1]} keeps every point eta-accurate "
        f"(policy={cfg.policy}, {trials} draws per size)",
        last_n=sizes[-1],
    )
