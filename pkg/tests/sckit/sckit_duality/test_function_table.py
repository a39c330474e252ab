"""
Tests for FunctionTable.
"""

import numpy as np
import pytest

from sckit.sckit_core.domain import Hypothesis
from sckit.sckit_core.exceptions import InvalidArgumentError
from sckit.sckit_duality import FunctionTable, family_table


class TestFunctionTable:
    """Test cases for FunctionTable."""

    def test_defaults(self):
        table = FunctionTable([[0.0, 1.0, 0.5]])
        assert table.shape == (1, 3)
        assert table.row_names == ("f0",)
        assert table.points[:, 0].tolist() == [0.0, 1.0, 2.0]

    def test_transpose(self):
        table = FunctionTable([[0.0, 1.0], [0.25, 0.75]], points=[[0.1, 0.2], [0.3, 0.4]])
        dual = table.transpose()
        assert dual.shape == (2, 2)
        assert dual.values.tolist() == [[0.0, 0.25], [1.0, 0.75]]
        assert dual.row_names == ("0.1;0.2", "0.3;0.4")
        assert np.array_equal(dual.transpose().values, table.values)

    def test_csv_round_trip(self, temp_dir):
        table = FunctionTable(
            [[0.0, 1.0], [0.25, -0.125]], points=[[0.1, 0.2], [0.3, 0.4]], row_names=("a", "b")
        )
        path = temp_dir / "table.csv"
        table.to_csv(path)
        loaded = FunctionTable.from_csv(path)
        assert loaded.row_names == ("a", "b")
        assert np.array_equal(loaded.values, table.values)
        assert np.array_equal(loaded.points, table.points)

    def test_add_rows(self):
        table = FunctionTable([[0.0, 1.0]]).add_rows([[0.5, 0.5]])
        assert table.shape == (2, 2)
        assert table.row_names == ("f0", "f1")

    def test_validation(self):
        with pytest.raises(InvalidArgumentError):
            FunctionTable([0.0, 1.0])
        with pytest.raises(InvalidArgumentError):
            FunctionTable([[0.0, np.nan]])
        with pytest.raises(InvalidArgumentError):
            FunctionTable([[0.0, 1.0]], points=[0.0])
        with pytest.raises(InvalidArgumentError):
            FunctionTable([[0.0, 1.0]], row_names=("a", "b"))


class TestFamilyTable:
    """Test cases for family_table."""

    def test_evaluates_each_function(self):
        functions = [
            Hypothesis(lambda X: X[:, 0]),
            Hypothesis(lambda X: 1 - X[:, 0]),
        ]
        table = family_table(functions, [0.0, 0.25, 1.0], row_names=("id", "flip"))
        assert table.values.tolist() == [[0.0, 0.25, 1.0], [1.0, 0.75, 0.0]]
        assert table.row_names == ("id", "flip")

    def test_needs_functions(self):
        with pytest.raises(InvalidArgumentError):
            family_table([], [0.0])
