"""
Compression and reconstruction.

``compress`` runs MedBoost, then Sparsify, and keeps only the subsamples
that trained the selected hypotheses. ``reconstruct`` re-runs the ERM on
each stored subsample and predicts with the unweighted median of the
rebuilt hypotheses (a majority vote for binary labels). Reconstruction
reads nothing but the compression set and needs the ERM to be a
deterministic function of its ordered subsample.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from sckit.sckit_boosting import (
    BoostConfig,
    BoostTrace,
    GenericWeakLearner,
    SparseEnsemble,
    SparsifyConfig,
    WeakCertificate,
    WeakLearnConfig,
    run_medboost,
    sparsify,
)
from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.aggregation import weighted_median_batch
from sckit.sckit_core.domain import (
    Hypothesis,
    LabeledSample,
    TaskKind,
    WeightedEnsemble,
    as_points,
    evaluate_members,
)
from sckit.sckit_core.exceptions import ErmContractError, InvalidArgumentError
from sckit.sckit_learners import BaseERM, create_erm

from .side_info import SideInfo, decode_side_info, encode_side_info, side_info_budget

logger = SCKitLogger.get_logger(__name__)

FORMAT_VERSION = 1

# Sparsify counts misclassifications on {0, 1} labels with this threshold.
BINARY_SPARSIFY_ETA = 0.5


@dataclass(frozen=True)
class SchemeMeta:
    """Parameters a compression set was built with."""

    eta: float
    gamma: float
    task: TaskKind
    erm_id: str
    version: int = FORMAT_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eta": self.eta,
            "gamma": self.gamma,
            "task": self.task.value,
            "erm_id": self.erm_id,
            "version": self.version,
        }


@dataclass(frozen=True, eq=False)
class CompressionSet:
    """
    Stored examples plus the side information that groups them.

    ``indices``, ``points`` and ``labels`` list the k stored examples sorted by
    sample index; ``groups`` recovers the n ordered training subsamples.
    """

    indices: np.ndarray
    points: np.ndarray
    labels: np.ndarray
    side_info: SideInfo
    n_groups: int
    meta: SchemeMeta
    _groups: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        indices = np.array(self.indices, dtype=np.int64).reshape(-1)
        points = as_points(self.points)
        labels = np.array(self.labels, dtype=np.float64).reshape(-1)
        if not (indices.size == points.shape[0] == labels.size):
            raise InvalidArgumentError("indices, points and labels must have one entry per example")
        if indices.size == 0:
            raise InvalidArgumentError("a compression set stores at least one example")
        if np.any(indices < 0) or np.any(np.diff(indices) < 0):
            raise InvalidArgumentError("stored examples must be sorted by nonnegative sample index")
        for arr in (indices, points, labels):
            arr.setflags(write=False)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "labels", labels)
        positions = decode_side_info(self.side_info, self.n_groups, indices.size)
        object.__setattr__(self, "_groups", tuple(tuple(g) for g in positions))

    @property
    def k(self) -> int:
        """Number of stored examples, counting repeats."""
        return int(self.indices.size)

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    @property
    def side_info_bits(self) -> int:
        return self.side_info.bit_length

    @property
    def side_info_bound(self) -> int:
        """ceil(k * log2(k)) + 2n."""
        return side_info_budget(self.k, self.n_groups)

    @property
    def groups(self) -> Tuple[Tuple[int, ...], ...]:
        """Sample indices of each group, in training order."""
        return tuple(tuple(int(self.indices[p]) for p in g) for g in self._groups)

    def group_sample(self, j: int) -> LabeledSample:
        """The j-th training subsample, dereferenced from the stored examples."""
        positions = list(self._groups[j])
        return LabeledSample(self.points[positions], self.labels[positions], self.meta.task)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompressionSet):
            return NotImplemented
        return (
            self.meta == other.meta
            and self.n_groups == other.n_groups
            and self.side_info == other.side_info
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.points, other.points)
            and np.array_equal(self.labels, other.labels)
        )

    __hash__ = None  # type: ignore[assignment]

    def summary(self) -> Dict[str, Any]:
        return {
            "n": self.n_groups,
            "k": self.k,
            "distinct_examples": int(np.unique(self.indices).size),
            "side_info_bits": self.side_info_bits,
            "side_info_bound": self.side_info_bound,
            **self.meta.to_dict(),
        }


def build_compression_set(
    groups: Sequence[Sequence[int]], sample: LabeledSample, meta: SchemeMeta
) -> CompressionSet:
    """
    Encode groups of sample indices as a compression set.

    Raises:
        InvalidArgumentError: If a group is empty or an index is out of range
    """
    if any(len(g) == 0 for g in groups):
        raise InvalidArgumentError("compression groups must be nonempty")
    indices, side = encode_side_info(groups)
    if indices.size and (indices[0] < 0 or indices[-1] >= len(sample)):
        raise InvalidArgumentError("group index out of range for the sample")
    return CompressionSet(
        indices=indices,
        points=sample.points[indices],
        labels=sample.labels[indices],
        side_info=side,
        n_groups=len(groups),
        meta=meta,
    )


@dataclass(frozen=True, eq=False)
class ReconstructedHypothesis:
    """Unweighted median of the hypotheses rebuilt from a compression set."""

    members: Tuple[Hypothesis, ...]
    task: TaskKind = TaskKind.REAL

    def __len__(self) -> int:
        return len(self.members)

    def predict(self, points: Any) -> np.ndarray:
        values = evaluate_members(self.members, points)
        return weighted_median_batch(values, np.ones(values.shape[0]))

    def __call__(self, point: Any) -> float:
        x = np.atleast_1d(np.asarray(point, dtype=np.float64)).reshape(1, -1)
        return float(self.predict(x)[0])

    def max_error(self, sample: LabeledSample) -> float:
        """max_i |h(x_i) - y_i| over a sample."""
        return float(np.max(np.abs(self.predict(sample.points) - sample.labels)))


def reconstruct(
    cs: CompressionSet,
    erm: Optional[BaseERM] = None,
    max_workers: Optional[int] = None,
) -> ReconstructedHypothesis:
    """
    Rebuild the hypothesis a compression set encodes.

    Args:
        cs: Compression set
        erm: ERM to retrain with; created from ``cs.meta.erm_id`` when omitted
        max_workers: Threads for retraining the groups

    Returns:
        ReconstructedHypothesis over the n retrained group hypotheses

    Raises:
        ErmContractError: If the ERM's identifier differs from the one recorded
    """
    if erm is None:
        erm = create_erm(cs.meta.erm_id)
    elif erm.identifier != cs.meta.erm_id:
        raise ErmContractError(
            f"compression set was built with {cs.meta.erm_id!r}, not {erm.identifier!r}"
        )

    subsamples = [cs.group_sample(j) for j in range(cs.n_groups)]
    if max_workers is not None and max_workers > 1 and len(subsamples) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            members = list(executor.map(erm.fit, subsamples))
    else:
        members = [erm.fit(s) for s in subsamples]
    return ReconstructedHypothesis(tuple(members), cs.meta.task)


@dataclass(frozen=True, eq=False)
class PipelineResult:
    """Every intermediate product of one compression run."""

    ensemble: WeightedEnsemble
    trace: BoostTrace
    sparse: SparseEnsemble
    compression_set: CompressionSet

    @property
    def early_exit(self) -> bool:
        return self.trace.early_exit

    @property
    def certificates(self) -> List[Optional[WeakCertificate]]:
        return self.trace.certificates


def sparsify_eta(task: TaskKind, eta: float) -> float:
    """Accuracy Sparsify must keep: eta for real labels, 1/2 for binary labels."""
    return BINARY_SPARSIFY_ETA if task is TaskKind.BINARY else eta


def run_pipeline(
    sample: LabeledSample,
    erm: BaseERM,
    boost_cfg: BoostConfig,
    weak_cfg: WeakLearnConfig,
    sparsify_cfg: SparsifyConfig,
    rng: np.random.Generator,
    dual_dim: Optional[Callable[[float], float]] = None,
) -> PipelineResult:
    """
    Boost, sparsify and encode a sample.

    Sparsify runs with the boosting gamma and with ``sparsify_eta(task, eta)``,
    whatever ``sparsify_cfg`` says. When MedBoost exits early the single
    exact hypothesis is kept and Sparsify is skipped.

    Raises:
        WeakLearningFailure, SparsifyFailure: Propagated from the stages
    """
    ensemble, trace = run_medboost(sample, GenericWeakLearner(erm, weak_cfg), boost_cfg, rng)

    if trace.early_exit:
        sparse = SparseEnsemble(hypotheses=(ensemble.hypotheses[0],), source_rounds=(0,))
    else:
        cfg = sparsify_cfg.model_copy(
            update={"eta": sparsify_eta(sample.task, boost_cfg.eta), "gamma": boost_cfg.gamma}
        )
        sparse = sparsify(ensemble, sample, cfg, rng, dual_dim=dual_dim)

    groups = []
    for h in sparse.hypotheses:
        if h.provenance is None:
            raise InvalidArgumentError(f"{h!r} carries no training provenance to compress")
        groups.append(h.provenance)

    meta = SchemeMeta(
        eta=boost_cfg.eta, gamma=boost_cfg.gamma, task=sample.task, erm_id=erm.identifier
    )
    cs = build_compression_set(groups, sample, meta)
    logger.info(
        f"Compressed m={len(sample)} to n={cs.n_groups} groups, k={cs.k} examples, "
        f"{cs.side_info_bits} side bits"
    )
    return PipelineResult(ensemble=ensemble, trace=trace, sparse=sparse, compression_set=cs)


def compress(
    sample: LabeledSample,
    erm: BaseERM,
    boost_cfg: BoostConfig,
    weak_cfg: WeakLearnConfig,
    sparsify_cfg: SparsifyConfig,
    rng: np.random.Generator,
    dual_dim: Optional[Callable[[float], float]] = None,
) -> CompressionSet:
    """Compress a sample; see ``run_pipeline``."""
    return run_pipeline(
        sample, erm, boost_cfg, weak_cfg, sparsify_cfg, rng, dual_dim=dual_dim
    ).compression_set
