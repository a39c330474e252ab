"""
Tests for the explicit dual-shattered families.
"""

import numpy as np
import pytest

from sckit.sckit_core.exceptions import InvalidArgumentError
from sckit.sckit_duality import (
    bv_shattered_family,
    dual_bv_table,
    fat_shattering_dim,
    is_t_shattered,
    lipschitz_shattered_family,
    packing_number_greedy,
)
from sckit.sckit_learners import dual_dim_bv, pairwise_distances, total_variation


class TestBVFamily:
    """Test cases for bv_shattered_family and dual_bv_table."""

    def test_eighth_scale(self):
        table, cert = bv_shattered_family(1.0, 0.125)
        assert table.shape == (3, 8)
        assert table.points[:, 0].tolist() == [j / 8 for j in range(1, 9)]
        for row in table.values:
            assert set(row.tolist()) <= {0.125, -0.125}
            assert total_variation(row) <= 0.75
        assert cert.k == 3
        assert cert.validate(table.transpose())

    def test_zero_offset_rechecks(self):
        table, _ = bv_shattered_family(1.0, 0.0625)
        dual = table.transpose()
        assert is_t_shattered(dual, range(table.n_functions), 0.0625, offsets=np.zeros(4))

    def test_precondition(self):
        with pytest.raises(InvalidArgumentError):
            bv_shattered_family(1.0, 0.3)
        with pytest.raises(InvalidArgumentError):
            bv_shattered_family(1.0, 0.25)

    @pytest.mark.parametrize("ratio", [8, 16])
    def test_dual_dimension_sandwich(self, ratio):
        t = 1.0 / ratio
        d = fat_shattering_dim(dual_bv_table(1.0, t), t, k_max=7)
        assert int(np.log2(ratio)) <= d <= dual_dim_bv(1.0, t)

    def test_extra_functions(self, rng):
        dual = dual_bv_table(1.0, 0.125, extra_functions=4, rng=rng)
        assert dual.shape == (8, 7)
        assert 3 <= fat_shattering_dim(dual, 0.125, k_max=7) <= 6

    def test_extra_functions_need_rng(self):
        with pytest.raises(InvalidArgumentError):
            dual_bv_table(1.0, 0.125, extra_functions=2)


class TestLipschitzFamily:
    """Test cases for lipschitz_shattered_family."""

    packing = np.array([0.0, 1 / 3, 2 / 3, 1.0])

    def test_four_points(self):
        table, cert = lipschitz_shattered_family(self.packing, 1.0, 1 / 6)
        assert table.shape == (2, 4)
        assert cert.k == 2
        assert cert.validate(table.transpose())

    def test_lipschitz_on_the_packing(self):
        table, _ = lipschitz_shattered_family(self.packing, 1.0, 1 / 6)
        D = pairwise_distances(self.packing, self.packing)
        for row in table.values:
            assert np.all(np.abs(row[:, None] - row[None, :]) <= D + 1e-12)

    def test_two_points(self):
        table, cert = lipschitz_shattered_family([0.0, 1.0], 2.0, 0.5)
        assert table.shape == (1, 2)
        assert sorted(table.values[0].tolist()) == [-0.5, 0.5]
        assert cert.k == 1

    def test_dual_dimension_bounds(self):
        t = 1 / 6
        table, _ = lipschitz_shattered_family(self.packing, 1.0, t)
        d = fat_shattering_dim(table.transpose(), t, k_max=5)
        count, _ = packing_number_greedy(self.packing, 2 * t)
        assert d == 2
        assert d <= np.ceil(np.log2(count))

    def test_packing_violation(self):
        with pytest.raises(InvalidArgumentError, match="points 0 and 1"):
            lipschitz_shattered_family([0.0, 0.2, 1.0], 1.0, 1 / 6)

    def test_single_point(self):
        with pytest.raises(InvalidArgumentError):
            lipschitz_shattered_family([0.5], 1.0, 0.1)


class TestPacking:
    """Test cases for packing_number_greedy."""

    grid = [0.0, 0.5, 1.0]

    def test_larger_than_diameter(self):
        count, kept = packing_number_greedy(self.grid, 2.0)
        assert count == 1
        assert kept[:, 0].tolist() == [0.0]

    def test_all_kept(self):
        assert packing_number_greedy(self.grid, 0.4)[0] == 3

    def test_greedy_skips_middle(self):
        count, kept = packing_number_greedy(self.grid, 0.6)
        assert count == 2
        assert kept[:, 0].tolist() == [0.0, 1.0]

    def test_maximal(self, rng):
        X = rng.uniform(size=(200, 2))
        _, kept = packing_number_greedy(X, 0.2)
        assert np.all(pairwise_distances(X, kept).min(axis=1) < 0.2)

    def test_invalid_eps(self):
        with pytest.raises(InvalidArgumentError):
            packing_number_greedy(self.grid, 0.0)
