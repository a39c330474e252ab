"""
File helpers for the CLI: metrics tables and labeled-sample CSVs.
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.domain import LabeledSample, TaskKind
from sckit.sckit_core.exceptions import InvalidArgumentError

logger = SCKitLogger.get_logger(__name__)

LABEL_COLUMN = "y"


def _config_json(config: Dict[str, Any]) -> str:
    return json.dumps(config, sort_keys=True, separators=(",", ":"))


def metrics_frame(rows: Sequence[Dict[str, Any]], config: Dict[str, Any]) -> pd.DataFrame:
    """Rows as a DataFrame with the resolved config in a trailing ``config`` column."""
    frame = pd.DataFrame(list(rows))
    frame["config"] = _config_json(config)
    return frame


def write_metrics(
    rows: Sequence[Dict[str, Any]],
    config: Dict[str, Any],
    path: Optional[Union[str, Path]] = None,
    fmt: str = "csv",
) -> None:
    """
    Write metrics rows as CSV (header row, one row per record) or JSON.

    The JSON form is ``{"config": {...}, "rows": [...]}``. With no path the
    table goes to stdout.
    """
    if fmt == "csv":
        text = metrics_frame(rows, config).to_csv(index=False, lineterminator="\n")
    elif fmt == "json":
        records = json.loads(pd.DataFrame(list(rows)).to_json(orient="records"))
        text = json.dumps({"config": config, "rows": records}, indent=2, sort_keys=True) + "\n"
    else:
        raise InvalidArgumentError(f"unknown output format {fmt!r}")

    if path is None:
        sys.stdout.write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(rows)} rows to {path}")


def save_sample_csv(sample: LabeledSample, path: Union[str, Path]) -> None:
    """Write a sample as columns x0..x{d-1}, y."""
    columns = {f"x{j}": sample.points[:, j] for j in range(sample.dim)}
    columns[LABEL_COLUMN] = sample.labels
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(columns).to_csv(path, index=False, lineterminator="\n", float_format="%.17g")


def load_sample_csv(path: Union[str, Path], task: TaskKind = TaskKind.REAL) -> LabeledSample:
    """
    Read a sample written by ``save_sample_csv``.

    Raises:
        InvalidArgumentError: If the file is missing or lacks the x/y columns
    """
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InvalidArgumentError(f"cannot read sample file {path}: {e}") from e

    point_columns: List[str] = [c for c in frame.columns if str(c).startswith("x")]
    if LABEL_COLUMN not in frame.columns or not point_columns:
        raise InvalidArgumentError(f"sample file {path} needs x0.. and {LABEL_COLUMN} columns")
    point_columns.sort(key=lambda c: int(str(c)[1:]))
    points = frame[point_columns].to_numpy(dtype=np.float64)
    labels = frame[LABEL_COLUMN].to_numpy(dtype=np.float64)
    return LabeledSample(points=points, labels=labels, task=task)
