"""
Finite function tables.

A FunctionTable holds the values of finitely many functions (rows) at
finitely many points (columns). Transposing it gives the dual class, in
which the points act on the functions by evaluation.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from sckit.sckit_core.domain import Hypothesis, as_points
from sckit.sckit_core.exceptions import InvalidArgumentError

_COORD_SEPARATOR = ";"


def _format_point(point: np.ndarray) -> str:
    return _COORD_SEPARATOR.join(repr(float(c)) for c in np.atleast_1d(point))


def _parse_point(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(c) for c in str(text).split(_COORD_SEPARATOR))
    except ValueError as e:
        raise InvalidArgumentError(f"column header {text!r} is not a point") from e


@dataclass(frozen=True, eq=False)
class FunctionTable:
    """Values of functions (rows) at points (columns)."""

    values: np.ndarray
    points: Optional[np.ndarray] = None
    row_names: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise InvalidArgumentError(f"values must be a 2-D matrix, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise InvalidArgumentError("table values must be finite")
        n_rows, n_cols = values.shape
        points = (
            np.arange(n_cols, dtype=np.float64).reshape(-1, 1)
            if self.points is None
            else as_points(self.points)
        )
        if points.shape[0] != n_cols:
            raise InvalidArgumentError(f"{n_cols} columns but {points.shape[0]} points")
        row_names = tuple(self.row_names) or tuple(f"f{i}" for i in range(n_rows))
        if len(row_names) != n_rows:
            raise InvalidArgumentError(f"{n_rows} rows but {len(row_names)} row names")
        values.setflags(write=False)
        points.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "row_names", row_names)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.values.shape

    @property
    def n_functions(self) -> int:
        return self.values.shape[0]

    @property
    def n_points(self) -> int:
        return self.values.shape[1]

    def transpose(self) -> "FunctionTable":
        """The dual table: points become functions on the original functions."""
        return FunctionTable(
            values=self.values.T,
            points=np.arange(self.n_functions, dtype=np.float64),
            row_names=tuple(_format_point(p) for p in self.points),
        )

    def add_rows(self, values, row_names: Sequence[str] = ()) -> "FunctionTable":
        """Return a table with more functions evaluated at the same points."""
        extra = np.atleast_2d(np.asarray(values, dtype=np.float64))
        names = tuple(row_names) or tuple(
            f"f{i}" for i in range(self.n_functions, self.n_functions + extra.shape[0])
        )
        return FunctionTable(
            values=np.vstack([self.values, extra]),
            points=self.points,
            row_names=self.row_names + names,
        )

    def to_frame(self) -> pd.DataFrame:
        """DataFrame with one row per function and point coordinates as column headers."""
        frame = pd.DataFrame(
            self.values,
            index=pd.Index(self.row_names, name="function"),
            columns=[_format_point(p) for p in self.points],
        )
        return frame

    def to_csv(self, path: Union[str, Path]) -> None:
        self.to_frame().to_csv(path)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "FunctionTable":
        points = np.array([_parse_point(c) for c in frame.columns], dtype=np.float64)
        return cls(
            values=frame.to_numpy(dtype=np.float64),
            points=points,
            row_names=tuple(str(i) for i in frame.index),
        )

    @classmethod
    def from_csv(cls, path: Union[str, Path]) -> "FunctionTable":
        return cls.from_frame(pd.read_csv(path, index_col=0))


def family_table(
    functions: Sequence[Hypothesis], points, row_names: Sequence[str] = ()
) -> FunctionTable:
    """Evaluate hypotheses at points and collect the values in a table."""
    if len(functions) == 0:
        raise InvalidArgumentError("at least one function is required")
    X = as_points(points)
    values = np.vstack([h.predict(X) for h in functions])
    return FunctionTable(values=values, points=X, row_names=tuple(row_names))
