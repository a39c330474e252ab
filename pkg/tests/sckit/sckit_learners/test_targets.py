"""
Tests for random targets and sample drawing.
"""

import numpy as np

from sckit.sckit_core.domain import TaskKind
from sckit.sckit_learners import (
    draw_sample,
    random_bv_target,
    random_lipschitz_target,
    random_threshold_target,
    total_variation,
)


class TestTargets:
    """Test cases for realizable targets."""

    def test_bv_target_within_budget(self, rng):
        for _ in range(50):
            target = random_bv_target(1.0, rng)
            values = target.evaluator.values
            assert total_variation(values) <= 1.0 + 1e-12
            assert values.min() >= 0.0 and values.max() <= 1.0

    def test_lipschitz_target_is_lipschitz(self, rng):
        target = random_lipschitz_target(2.0, rng)
        a, b = rng.uniform(size=500), rng.uniform(size=500)
        assert np.all(np.abs(target.predict(a) - target.predict(b)) <= 2.0 * np.abs(a - b) + 1e-9)

    def test_threshold_sample_is_binary(self, rng):
        sample = draw_sample(random_threshold_target(rng), 50, rng, task=TaskKind.BINARY)
        assert set(np.unique(sample.labels)) <= {0.0, 1.0}

    def test_draw_sample_deterministic(self):
        a = draw_sample(random_bv_target(1.0, np.random.default_rng(1)), 20, np.random.default_rng(2))
        b = draw_sample(random_bv_target(1.0, np.random.default_rng(1)), 20, np.random.default_rng(2))
        assert np.array_equal(a.points, b.points) and np.array_equal(a.labels, b.labels)
