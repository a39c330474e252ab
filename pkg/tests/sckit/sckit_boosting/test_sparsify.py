"""
Tests for Sparsify.
"""

import math

import numpy as np
import pytest

from sckit.sckit_boosting import (
    BoostConfig,
    GenericWeakLearner,
    SparseEnsemble,
    SparsifyConfig,
    WeakLearnConfig,
    categorical_sample,
    run_medboost,
    sparsify,
    theorem_sparsify_size,
)
from sckit.sckit_core.domain import Hypothesis, LabeledSample, WeightedEnsemble
from sckit.sckit_core.exceptions import InvalidArgumentError, SparsifyFailure
from sckit.sckit_learners import BVERM, fat_dim_bv


def constant(c):
    return Hypothesis(lambda X: np.full(X.shape[0], c), name=f"const({c})")


@pytest.fixture
def boosted_bv(bv_sample):
    """MedBoost ensemble on the BV fixture sample."""
    weak_cfg = WeakLearnConfig(eta=0.1, fat_dim=lambda t: fat_dim_bv(1.0, t))
    ensemble, trace = run_medboost(
        bv_sample,
        GenericWeakLearner(BVERM(1.0), weak_cfg),
        BoostConfig(gamma=0.125, eta=0.2),
        np.random.default_rng(11),
    )
    return ensemble, trace


class TestCategoricalSample:
    """Test cases for categorical_sample."""

    def test_single_positive_weight(self, rng):
        assert categorical_sample([0.0, 2.0, 0.0], 100, rng).tolist() == [1] * 100

    def test_two_equal_weights(self, rng):
        draws = categorical_sample([1.0, 1.0], 10_000, rng)
        assert abs(int((draws == 0).sum()) - 5000) <= 250

    @pytest.mark.parametrize("weights", [[], [0.0, 0.0], [1.0, -1.0], [np.nan]])
    def test_invalid_weights(self, weights, rng):
        with pytest.raises(InvalidArgumentError):
            categorical_sample(weights, 3, rng)


class TestTheoremSize:
    """Test cases for theorem_sparsify_size."""

    def test_formula_is_odd(self):
        n = theorem_sparsify_size(0.125, 0.2, lambda t: 1)
        assert n % 2 == 1
        assert n in (math.ceil(64 * math.log(5) ** 2), math.ceil(64 * math.log(5) ** 2) + 1)

    def test_zero_dimension(self):
        assert theorem_sparsify_size(0.125, 0.2, lambda t: 0) == 1


class TestSparsify:
    """Test cases for sparsify."""

    def test_copies_of_exact_hypothesis(self, small_real_sample, rng):
        h = Hypothesis(lambda X: np.interp(X[:, 0], [0.1, 0.4, 0.6, 0.9], [0.0, 0.5, 0.5, 1.0]))
        ensemble = WeightedEnsemble((h,) * 5, np.ones(5))
        sparse = sparsify(ensemble, small_real_sample, SparsifyConfig(eta=0.2), rng)
        assert len(sparse) == 9
        assert np.array_equal(sparse.predict(small_real_sample.points), small_real_sample.labels)

    def test_explicit_size_made_odd(self, small_real_sample, rng):
        ensemble = WeightedEnsemble((constant(0.5),), [1.0])
        sparse = sparsify(ensemble, small_real_sample, SparsifyConfig(policy="explicit", n=4, eta=0.5), rng)
        assert len(sparse) == 5

    def test_impossible_majority(self, rng):
        sample = LabeledSample(points=[0.0, 1.0], labels=[0.0, 1.0])
        ensemble = WeightedEnsemble((constant(0.0), constant(1.0)), [1.0, 1.0])
        with pytest.raises(SparsifyFailure) as info:
            sparsify(ensemble, sample, SparsifyConfig(policy="explicit", n=3, eta=0.2), rng)
        assert info.value.last_n == 3
        with pytest.raises(SparsifyFailure) as info:
            sparsify(ensemble, sample, SparsifyConfig(eta=0.2), rng)
        assert info.value.last_n == 319

    def test_theorem_policy_needs_dual_dim(self, small_real_sample, rng):
        ensemble = WeightedEnsemble((constant(0.5),), [1.0])
        with pytest.raises(InvalidArgumentError):
            sparsify(ensemble, small_real_sample, SparsifyConfig(policy="theorem"), rng)

    def test_trials_per_size(self):
        assert SparsifyConfig().trials_per_n == 7
        assert SparsifyConfig(max_trials_per_n=2).trials_per_n == 2

    def test_source_rounds_point_into_ensemble(self, small_real_sample, rng):
        hs = tuple(constant(c) for c in (0.45, 0.5, 0.55))
        ensemble = WeightedEnsemble(hs, [1.0, 2.0, 3.0])
        sparse = sparsify(ensemble, small_real_sample, SparsifyConfig(eta=0.6), rng)
        for h, j in zip(sparse.hypotheses, sparse.source_rounds):
            assert h is ensemble.hypotheses[j]

    @pytest.mark.slow
    def test_accepted_draw_keeps_majority(self, boosted_bv, bv_sample):
        ensemble, _ = boosted_bv
        sparse = sparsify(ensemble, bv_sample, SparsifyConfig(eta=0.2), np.random.default_rng(5))
        assert sparse.satisfies_majority(bv_sample, 0.2)
        assert np.max(np.abs(sparse.predict(bv_sample.points) - bv_sample.labels)) <= 0.2

    @pytest.mark.slow
    def test_threads_do_not_change_result(self, boosted_bv, bv_sample):
        ensemble, _ = boosted_bv
        serial = sparsify(ensemble, bv_sample, SparsifyConfig(eta=0.2), np.random.default_rng(5))
        threaded = sparsify(
            ensemble, bv_sample, SparsifyConfig(eta=0.2, max_workers=4), np.random.default_rng(5)
        )
        assert serial.source_rounds == threaded.source_rounds


class TestSparseEnsemble:
    """Test cases for SparseEnsemble."""

    def test_majority_predicate(self):
        sample = LabeledSample(points=[0.0], labels=[0.0])
        sparse = SparseEnsemble((constant(0.0), constant(0.0), constant(1.0)), (0, 0, 1))
        assert sparse.failure_counts(sample, 0.2).tolist() == [1]
        assert sparse.satisfies_majority(sample, 0.2)
        assert sparse.predict(sample.points).tolist() == [0.0]

    def test_validation(self):
        with pytest.raises(InvalidArgumentError):
            SparseEnsemble((), ())
        with pytest.raises(InvalidArgumentError):
            SparseEnsemble((constant(0.0),), (0, 1))
