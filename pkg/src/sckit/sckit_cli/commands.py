"""
Subcommand implementations.

Each command is a deterministic function of its configuration and seed:
random generators are spawned from ``cfg.seed`` in a fixed order, and
concurrent trials are collected in trial order.
"""

import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from sckit.sckit_boosting import train_weak_hypothesis, weak_sample_size
from sckit.sckit_compression import (
    PipelineResult,
    deserialize,
    load_compression_set,
    reconstruct,
    run_pipeline,
    serialize,
)
from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.domain import EmpiricalDistribution, Hypothesis, LabeledSample, TaskKind
from sckit.sckit_core.exceptions import BudgetExceededError, InvalidArgumentError, WeakLearningFailure
from sckit.sckit_duality import (
    balanced_gray_code,
    dual_bv_table,
    fat_shattering_dim,
    lipschitz_shattered_family,
    matrix_variation,
    packing_number_greedy,
)
from sckit.sckit_learners import (
    draw_sample,
    dual_dim_lipschitz,
    random_bv_target,
    random_lipschitz_target,
    random_threshold_target,
)

from .config import ExperimentConfig
from .io import load_sample_csv, save_sample_csv, write_metrics

logger = SCKitLogger.get_logger(__name__)

COMPRESSION_FILE = "compression.mcsc"
SAMPLE_FILE = "sample.csv"
DEFAULT_OUTPUT_DIR = "sckit_output"

Row = Dict[str, Any]


def make_target(cfg: ExperimentConfig, rng: np.random.Generator) -> Hypothesis:
    """A random target realizable by the configured class."""
    if cfg.task == "bv":
        return random_bv_target(cfg.v, rng, n_jumps=cfg.n_jumps)
    if cfg.task == "lipschitz":
        return random_lipschitz_target(cfg.L, rng, dim=cfg.dim, n_anchors=cfg.n_anchors)
    return random_threshold_target(rng)


def _sample_and_compress(
    cfg: ExperimentConfig, m: int, rng: np.random.Generator
) -> Tuple[LabeledSample, PipelineResult, float]:
    target_rng, sample_rng, pipeline_rng = rng.spawn(3)
    sample = draw_sample(make_target(cfg, target_rng), m, sample_rng, dim=cfg.dim, task=cfg.task_kind)
    concept_class = cfg.concept_class()

    start = time.perf_counter()
    result = run_pipeline(
        sample,
        concept_class.erm(),
        cfg.boost_config(),
        cfg.weak_config(),
        cfg.sparsify_config(),
        pipeline_rng,
        dual_dim=concept_class.dual_dim,
    )
    return sample, result, time.perf_counter() - start


def passes(max_error: float, eta: float, task: TaskKind) -> bool:
    """Real tasks pass at max error <= eta, binary tasks only when exact."""
    if task is TaskKind.BINARY:
        return max_error == 0.0
    return max_error <= eta


def _compression_row(
    cfg: ExperimentConfig, sample: LabeledSample, result: PipelineResult, data: bytes, elapsed: float
) -> Row:
    # reconstruct from the serialized bytes, as a reader of the file would
    cs = deserialize(data)
    h = reconstruct(cs, max_workers=cfg.workers)
    max_error = h.max_error(sample)
    boost = cfg.boost_config()
    row: Row = {
        "task": cfg.task,
        "m": len(sample),
        "rounds": result.trace.rounds,
        "early_exit": result.early_exit,
        "n": cs.n_groups,
        "k": cs.k,
        "distinct_examples": int(np.unique(cs.indices).size),
        "side_info_bits": cs.side_info_bits,
        "side_info_bound": cs.side_info_bound,
        "file_bytes": len(data),
        "margin_violations": int(
            result.ensemble.margin_violations(sample, boost.gamma, boost.eta).size
        ),
        "max_error": max_error,
        "passed": passes(max_error, cfg.eta, cfg.task_kind),
    }
    if cfg.record_timing:
        row["wall_time_s"] = elapsed
    return row


def cmd_compress(cfg: ExperimentConfig) -> List[Row]:
    """
    Compress one sample of a random target and write the artifacts.

    Writes ``compression.mcsc``, ``sample.csv`` and ``metrics.<format>`` into
    the output directory.
    """
    out_dir = Path(cfg.output or DEFAULT_OUTPUT_DIR)
    out_dir.mkdir(parents=True, exist_ok=True)

    sample, result, elapsed = _sample_and_compress(cfg, cfg.m, np.random.default_rng(cfg.seed))
    data = serialize(result.compression_set)
    (out_dir / COMPRESSION_FILE).write_bytes(data)
    save_sample_csv(sample, out_dir / SAMPLE_FILE)

    rows = [_compression_row(cfg, sample, result, data, elapsed)]
    write_metrics(rows, cfg.resolved(), out_dir / f"metrics.{cfg.format}", cfg.format)
    logger.info(
        f"{cfg.task}: m={cfg.m} -> n={rows[0]['n']}, k={rows[0]['k']}, "
        f"max error {rows[0]['max_error']:.4g}"
    )
    return rows


def cmd_verify(
    compression_path: Union[str, Path],
    sample_path: Union[str, Path],
    output: Optional[Union[str, Path]] = None,
    fmt: str = "csv",
    workers: Optional[int] = None,
) -> List[Row]:
    """
    Reconstruct a stored compression set and measure it on a sample.

    A sample the set was not built from may exceed eta; the row then says
    ``passed = False`` but the command still succeeds.
    """
    cs = load_compression_set(compression_path)
    sample = load_sample_csv(sample_path, task=cs.meta.task)
    if sample.dim != cs.dim:
        raise InvalidArgumentError(
            f"sample has dimension {sample.dim}, compression set {cs.dim}"
        )

    h = reconstruct(cs, max_workers=workers)
    max_error = h.max_error(sample)
    ok = passes(max_error, cs.meta.eta, cs.meta.task)
    if not ok:
        logger.warning(f"max error {max_error:.4g} exceeds eta = {cs.meta.eta}")

    rows = [
        {
            "m": len(sample),
            "n": cs.n_groups,
            "k": cs.k,
            "eta": cs.meta.eta,
            "max_error": max_error,
            "passed": ok,
        }
    ]
    provenance = {
        "compression": str(compression_path),
        "sample": str(sample_path),
        **cs.meta.to_dict(),
    }
    write_metrics(rows, provenance, output, fmt)
    return rows


def _weak_trial(cfg: ExperimentConfig, seed: np.random.SeedSequence, trial: int) -> Row:
    target_rng, sample_rng, draw_rng = np.random.default_rng(seed).spawn(3)
    sample = draw_sample(
        make_target(cfg, target_rng), cfg.m, sample_rng, dim=cfg.dim, task=cfg.task_kind
    )
    weak_cfg = cfg.weak_config(eta=cfg.boost_eta / 2 if cfg.task_kind is TaskKind.BINARY else cfg.eta)
    P = EmpiricalDistribution.uniform(len(sample))
    row: Row = {"trial": trial, "subsample_size": weak_sample_size(weak_cfg)}
    try:
        _, cert = train_weak_hypothesis(sample, P, cfg.concept_class().erm(), weak_cfg, draw_rng)
    except WeakLearningFailure as e:
        row.update(
            first_draw_success=False,
            retries=e.attempts - 1,
            fail_mass=e.best_fail_mass,
            succeeded=False,
        )
        return row
    row.update(
        first_draw_success=cert.attempts == 1,
        retries=cert.attempts - 1,
        fail_mass=cert.empirical_fail_mass,
        succeeded=True,
    )
    return row


def cmd_weakstudy(cfg: ExperimentConfig) -> List[Row]:
    """
    Run the generic weak learner on ``cfg.trials`` independent samples.

    One row per trial plus a summary row whose ``first_draw_failure_rate``
    is the share of trials whose first subsample draw was not weak.
    """
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)
    trials = range(cfg.trials)

    def run(i: int) -> Row:
        return _weak_trial(cfg, seeds[i], i)

    progress = dict(total=cfg.trials, desc="weakstudy", file=sys.stderr, leave=False)
    if cfg.workers is not None and cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            rows = list(tqdm(executor.map(run, trials), **progress))
    else:
        rows = [run(i) for i in tqdm(trials, **progress)]

    failures = sum(not r["first_draw_success"] for r in rows)
    summary: Row = {
        "trial": "summary",
        "subsample_size": rows[0]["subsample_size"],
        "first_draw_success": (len(rows) - failures) / len(rows),
        "retries": float(np.mean([r["retries"] for r in rows])),
        "fail_mass": float(np.mean([r["fail_mass"] for r in rows])),
        "succeeded": all(r["succeeded"] for r in rows),
        "first_draw_failure_rate": failures / len(rows),
    }
    rows.append(summary)
    logger.info(f"weakstudy: first-draw failure rate {summary['first_draw_failure_rate']:.3f}")
    write_metrics(rows, cfg.resolved(), cfg.output, cfg.format)
    return rows


def _dimension_or_budget(table, t: float, cfg: ExperimentConfig) -> Tuple[int, str]:
    try:
        return fat_shattering_dim(table, t, cfg.k_max, cfg.budget), "ok"
    except BudgetExceededError as e:
        return e.best_k, "budget_exceeded"


def _sandwich_row(kind: str, ratio: float, t: float, lower: float, dim: int, upper: float, status: str) -> Row:
    return {
        "kind": kind,
        "ratio": ratio,
        "t": t,
        "lower": lower,
        "dimension": dim,
        "upper": upper,
        "holds": (lower <= dim <= upper) if status == "ok" else None,
        "status": status,
    }


def cmd_duality(cfg: ExperimentConfig) -> List[Row]:
    """
    Brute-force dual dimensions against their bounds, and Gray code variations.

    BV rows probe v/t, Lipschitz rows probe L/t on a 1-D grid of
    ``grid_size`` points in [0, diam], Gray rows report V(M) for n bits.
    A row whose search runs out of budget reports the best size found; a
    Lipschitz ratio whose packing holds a single point is reported as
    ``degenerate``.

    Raises:
        InvalidArgumentError: If no probe is configured
    """
    if not (cfg.bv_ratios or cfg.lipschitz_ratios or cfg.gray_bits):
        raise InvalidArgumentError(
            "nothing to probe: set bv_ratios, lipschitz_ratios or gray_bits"
        )
    rng = np.random.default_rng(cfg.seed)
    rows: List[Row] = []

    for ratio in cfg.bv_ratios:
        t = cfg.v / ratio
        table = dual_bv_table(cfg.v, t, extra_functions=cfg.extra_functions, rng=rng)
        dim, status = _dimension_or_budget(table, t, cfg)
        lower = math.floor(round(math.log2(ratio), 9))
        rows.append(_sandwich_row("bv", ratio, t, lower, dim, 2 * math.log2(ratio), status))

    for ratio in cfg.lipschitz_ratios:
        t = cfg.L / ratio
        grid = np.linspace(0.0, cfg.diam, cfg.grid_size)
        count, packing = packing_number_greedy(grid, 2 * t / cfg.L)
        lower = math.floor(math.log2(count))
        upper = dual_dim_lipschitz(cfg.L, cfg.diam, 1.0, t)
        if count < 2:
            # one point carries no shattered family
            rows.append(_sandwich_row("lipschitz", ratio, t, lower, 0, upper, "degenerate"))
            continue
        table, _ = lipschitz_shattered_family(packing, cfg.L, t)
        dim, status = _dimension_or_budget(table.transpose(), t, cfg)
        rows.append(_sandwich_row("lipschitz", ratio, t, lower, dim, upper, status))

    for n in cfg.gray_bits:
        _, G, V = matrix_variation(balanced_gray_code(n))
        row = _sandwich_row("gray", float(n), float("nan"), (2**n - 1) / n, V, math.ceil(2**n / n), "ok")
        row["transitions"] = G
        rows.append(row)

    write_metrics(rows, cfg.resolved(), cfg.output, cfg.format)
    return rows


def cmd_sweep(cfg: ExperimentConfig) -> List[Row]:
    """
    Compression size against sample size.

    Every m reuses the seed, so all runs share one target and differ only
    in how many points are drawn.
    """
    rows: List[Row] = []
    for m in tqdm(cfg.m_values, desc="sweep", file=sys.stderr, leave=False):
        sample, result, elapsed = _sample_and_compress(cfg, m, np.random.default_rng(cfg.seed))
        row = _compression_row(cfg, sample, result, serialize(result.compression_set), elapsed)
        rows.append(row)
        logger.info(f"sweep m={m}: n={row['n']}, k={row['k']}")
    write_metrics(rows, cfg.resolved(), cfg.output, cfg.format)
    return rows
