"""
Tests for binary matrix variation and balanced Gray codes.
"""

import math

import numpy as np
import pytest

from sckit.sckit_core.exceptions import InvalidArgumentError, UnsupportedClassError
from sckit.sckit_duality import (
    BinaryMatrix,
    balanced_gray_code,
    enumeration_matrix,
    matrix_variation,
)


class TestMatrixVariation:
    """Test cases for matrix_variation."""

    def test_single_flip(self):
        per_column, G, V = matrix_variation(BinaryMatrix([[0], [1]]))
        assert per_column.tolist() == [1]
        assert (G, V) == (1, 1)

    def test_constant_matrix(self):
        per_column, G, V = matrix_variation(BinaryMatrix(np.ones((5, 3), dtype=int)))
        assert per_column.tolist() == [0, 0, 0]
        assert (G, V) == (0, 0)

    def test_reflected_code(self):
        per_column, G, V = matrix_variation(BinaryMatrix([[0, 0], [0, 1], [1, 1], [1, 0]]))
        assert per_column.tolist() == [1, 2]
        assert (G, V) == (3, 2)

    def test_last_row_not_compared_with_first(self):
        _, G, _ = matrix_variation(BinaryMatrix([[0], [1], [1]]))
        assert G == 1

    def test_rejects_non_binary(self):
        with pytest.raises(InvalidArgumentError):
            BinaryMatrix([[0, 2]])


class TestBalancedGrayCode:
    """Test cases for balanced_gray_code."""

    def test_one_bit(self):
        assert balanced_gray_code(1).rows() == [(0,), (1,)]

    def test_two_bits_is_reflected(self):
        assert balanced_gray_code(2).rows() == [(0, 0), (0, 1), (1, 1), (1, 0)]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_gray_and_balanced(self, n):
        M = balanced_gray_code(n)
        rows = M.rows()
        assert M.shape == (2**n, n)
        assert len(set(rows)) == 2**n
        assert np.all(np.abs(np.diff(M.entries.astype(int), axis=0)).sum(axis=1) == 1)
        per_column, G, V = matrix_variation(M)
        assert G == 2**n - 1
        assert V <= math.ceil(2**n / n)

    def test_four_bits_exactly_balanced(self):
        per_column, G, V = matrix_variation(balanced_gray_code(4))
        assert (G, V) == (15, 4)

    @pytest.mark.parametrize("n", [0, 6])
    def test_unsupported_sizes(self, n):
        with pytest.raises(UnsupportedClassError):
            balanced_gray_code(n)


class TestEnumerationLowerBound:
    """Every listing of all 2^n rows has some column flipping (2^n - 1) / n times."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_fixed_orders(self, n):
        for M in (enumeration_matrix(n), balanced_gray_code(n)):
            assert matrix_variation(M)[2] >= (2**n - 1) / n

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_random_orders(self, n, rng):
        for _ in range(100):
            M = enumeration_matrix(n, rng.permutation(2**n))
            assert matrix_variation(M)[2] >= (2**n - 1) / n

    def test_counting_order(self):
        assert enumeration_matrix(2).rows() == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_order_must_be_permutation(self):
        with pytest.raises(InvalidArgumentError):
            enumeration_matrix(2, np.array([0, 1, 1, 3]))
