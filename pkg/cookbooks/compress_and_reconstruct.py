#!/usr/bin/env python3
"""
Quick Start: Compress a Sample and Reconstruct It

This cookbook demonstrates how to:
- Draw a realizable sample from a random bounded-variation or threshold target
- Boost, sparsify and encode it into a compression set
- Write the compression set to disk, read it back and reconstruct
- Check that the reconstructed hypothesis is eta-close on every example

Prerequisites:
- sample-compression-toolkit installed (pip install -e .)

Usage:
    python cookbooks/compress_and_reconstruct.py [--task bv|threshold] [--m M]

Examples:
    # Bounded-variation target, 200 examples
    python cookbooks/compress_and_reconstruct.py --task bv --m 200

    # Threshold classifier, 1000 examples, written to a custom file
    python cookbooks/compress_and_reconstruct.py --task threshold --m 1000 --out th.mcsc
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from sckit.sckit_boosting import BoostConfig, SparsifyConfig, WeakLearnConfig
from sckit.sckit_compression import (
    load_compression_set,
    reconstruct,
    run_pipeline,
    save_compression_set,
)
from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.domain import TaskKind
from sckit.sckit_core.exceptions import SCKitError
from sckit.sckit_learners import (
    BVERM,
    VC_DIM_THRESHOLD,
    ThresholdERM,
    draw_sample,
    dual_dim_bv,
    fat_dim_bv,
    random_bv_target,
    random_threshold_target,
)

logger = SCKitLogger.get_logger(__name__)


def build_problem(task: str, m: int, v: float, rng: np.random.Generator):
    """Draw a sample and pick the matching ERM and complexity functions."""
    target_rng, sample_rng = rng.spawn(2)
    if task == "bv":
        sample = draw_sample(random_bv_target(v, target_rng), m, sample_rng)
        return sample, BVERM(v), (lambda t: fat_dim_bv(v, t)), (lambda t: dual_dim_bv(v, t))
    sample = draw_sample(random_threshold_target(target_rng), m, sample_rng, task=TaskKind.BINARY)
    return sample, ThresholdERM(), (lambda t: VC_DIM_THRESHOLD), None


def main():
    """Main function."""
    parser = argparse.ArgumentParser(description="Compress a sample and reconstruct it")
    parser.add_argument("--task", choices=["bv", "threshold"], default="bv")
    parser.add_argument("--m", type=int, default=200, help="Sample size")
    parser.add_argument("--v", type=float, default=1.0, help="Variation bound (bv)")
    parser.add_argument("--eta", type=float, default=0.2)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", default="compression.mcsc", help="Where to write the set")
    args = parser.parse_args()

    logger.info("=" * 60)
    logger.info(f"🗜️  Sample compression: task={args.task}, m={args.m}, seed={args.seed}")
    logger.info("=" * 60)

    data_rng, run_rng = np.random.default_rng(args.seed).spawn(2)
    sample, erm, fat_dim, dual_dim = build_problem(args.task, args.m, args.v, data_rng)

    # binary labels: any error exceeds eta/2 once MedBoost runs at eta = 1
    boost_eta = args.eta if sample.task is TaskKind.REAL else 1.0
    boost_cfg = BoostConfig(eta=boost_eta)
    weak_cfg = WeakLearnConfig(eta=boost_eta / 2, gamma=boost_cfg.gamma, fat_dim=fat_dim)

    try:
        result = run_pipeline(
            sample, erm, boost_cfg, weak_cfg, SparsifyConfig(), run_rng, dual_dim=dual_dim
        )
    except SCKitError as e:
        logger.error(f"❌ Compression failed: {e}")
        sys.exit(1)

    cs = result.compression_set
    logger.info(f"✅ Boosting rounds: {len(result.ensemble)} (early exit: {result.early_exit})")
    logger.info(f"✅ Sparse ensemble: n={len(result.sparse)}")
    logger.info(f"✅ Compression size: k={cs.k} of m={len(sample)}, {cs.side_info_bits} side bits")

    out = Path(args.out)
    save_compression_set(cs, out)
    logger.info(f"💾 Wrote {out} ({out.stat().st_size} bytes)")

    restored = load_compression_set(out)
    h = reconstruct(restored)
    err = h.max_error(sample)

    logger.info("-" * 60)
    tolerance = args.eta if sample.task is TaskKind.REAL else 0.0
    if err <= tolerance:
        logger.info(f"🎯 Reconstruction max error {err:.4f} <= {tolerance:g}")
    else:
        logger.warning(f"⚠️  Reconstruction max error {err:.4f} exceeds {tolerance:g}")
    logger.info("=" * 60)


if __name__ == "__main__":
    main()
