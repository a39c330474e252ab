#!/usr/bin/env python3
"""
sckit command line.

Usage:
    sckit compress --task bv --m 200 --eta 0.2 --seed 7 --output runs/bv
    sckit verify --compression runs/bv/compression.mcsc --sample runs/bv/sample.csv
    sckit weakstudy --task bv --eta 0.25 --delta 0.2 --trials 200 --output weak.csv
    sckit duality --bv-ratios 8 16 --gray-bits 2 3 4
    sckit sweep --task threshold --m-values 100 1000 10000

Every experiment flag mirrors a field of ExperimentConfig; ``--config``
reads a JSON file first and flags override it. Errors are printed to
stderr as one JSON line and mapped to the exit code of their category.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from dotenv import load_dotenv
from pydantic import ValidationError

from sckit.sckit_core import SCKitLogger
from sckit.sckit_core.exceptions import SCKitError

from .commands import cmd_compress, cmd_duality, cmd_sweep, cmd_verify, cmd_weakstudy
from .config import ExperimentConfig

logger = SCKitLogger.get_logger(__name__)

USAGE_EXIT_CODE = 2


def _rounds(value: str) -> Union[int, str]:
    return value if value == "auto" else int(value)


def _add_experiment_flags(parser: argparse.ArgumentParser) -> None:
    """Flags for ExperimentConfig fields; unset flags leave the config value alone."""
    parser.add_argument("--config", help="JSON config file; flags override its values")

    cls = parser.add_argument_group("function class")
    cls.add_argument("--task", choices=["bv", "lipschitz", "threshold"])
    cls.add_argument("--v", type=float, help="Variation bound (bv)")
    cls.add_argument("--L", type=float, help="Lipschitz constant (lipschitz)")
    cls.add_argument("--diam", type=float, help="Diameter of the instance space")
    cls.add_argument("--ddim", type=float, help="Doubling dimension of the instance space")
    cls.add_argument("--c-fat", dest="c_fat", type=float)
    cls.add_argument("--dim", type=int, help="Dimension of sample points")
    cls.add_argument("--n-jumps", dest="n_jumps", type=int)
    cls.add_argument("--n-anchors", dest="n_anchors", type=int)

    run = parser.add_argument_group("run")
    run.add_argument("--m", type=int, help="Sample size")
    run.add_argument("--eta", type=float)
    run.add_argument("--gamma", type=float)
    run.add_argument("--delta", type=float)
    run.add_argument("--seed", type=int)
    run.add_argument("--trials", type=int)
    run.add_argument("--m-values", dest="m_values", type=int, nargs="+")

    consts = parser.add_argument_group("constants")
    consts.add_argument("--c1", type=float)
    consts.add_argument("--c2", type=float)
    consts.add_argument("--c3", type=float)
    consts.add_argument("--c-T", dest="c_T", type=float)
    consts.add_argument("--rounds", type=_rounds, help="Boosting rounds or 'auto'")
    consts.add_argument("--max-retries", dest="max_retries", type=int)
    consts.add_argument("--alpha", type=float, help="ERM slack as a fraction of eta")
    consts.add_argument(
        "--sparsify-policy", dest="sparsify_policy", choices=["explicit", "theorem", "adaptive"]
    )
    consts.add_argument("--sparsify-n", dest="sparsify_n", type=int)
    consts.add_argument("--max-trials-per-n", dest="max_trials_per_n", type=int)

    dual = parser.add_argument_group("duality")
    dual.add_argument("--bv-ratios", dest="bv_ratios", type=float, nargs="*")
    dual.add_argument("--lipschitz-ratios", dest="lipschitz_ratios", type=float, nargs="*")
    dual.add_argument("--gray-bits", dest="gray_bits", type=int, nargs="*")
    dual.add_argument("--k-max", dest="k_max", type=int)
    dual.add_argument("--budget", type=int, help="Maximum shattering checks per row")
    dual.add_argument("--extra-functions", dest="extra_functions", type=int)
    dual.add_argument("--grid-size", dest="grid_size", type=int)

    out = parser.add_argument_group("output")
    out.add_argument("--workers", type=int)
    out.add_argument("--output", help="Output file (compress: output directory)")
    out.add_argument("--format", choices=["csv", "json"])
    out.add_argument("--record-timing", dest="record_timing", action="store_true")


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sckit",
        description="Sample compression schemes for real-valued and binary learners",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    experiments: Dict[str, Callable[[ExperimentConfig], List[Dict[str, Any]]]] = {
        "compress": cmd_compress,
        "weakstudy": cmd_weakstudy,
        "duality": cmd_duality,
        "sweep": cmd_sweep,
    }
    helps = {
        "compress": "Compress a sample of a random target and check the reconstruction",
        "weakstudy": "Measure how often the first weak-learner draw succeeds",
        "duality": "Brute-force dual fat-shattering dimensions and Gray code variations",
        "sweep": "Compression size against sample size",
    }
    for name, handler in experiments.items():
        sub = subparsers.add_parser(name, help=helps[name], argument_default=argparse.SUPPRESS)
        _add_experiment_flags(sub)
        sub.set_defaults(handler=handler)

    verify = subparsers.add_parser("verify", help="Reconstruct a stored compression set on a sample")
    verify.add_argument("--compression", required=True, help="Compression set file")
    verify.add_argument("--sample", required=True, help="Sample CSV (x0.., y)")
    verify.add_argument("--output", default=None)
    verify.add_argument("--format", choices=["csv", "json"], default="csv")
    verify.add_argument("--workers", type=int, default=None)
    return parser


def _report_error(category: str, message: str, exit_code: int) -> int:
    sys.stderr.write(
        json.dumps({"error": category, "exit_code": exit_code, "message": message}) + "\n"
    )
    return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = create_parser()
    args = parser.parse_args(argv)
    SCKitLogger.setup_global_config(level=getattr(logging, args.log_level))

    if args.command is None:
        parser.print_help(sys.stderr)
        return USAGE_EXIT_CODE

    try:
        if args.command == "verify":
            cmd_verify(args.compression, args.sample, args.output, args.format, args.workers)
            return 0

        overrides = {
            k: v
            for k, v in vars(args).items()
            if k not in ("command", "handler", "config", "log_level")
        }
        cfg = ExperimentConfig.from_sources(getattr(args, "config", None), overrides)
        args.handler(cfg)
        return 0
    except ValidationError as e:
        return _report_error("ValidationError", str(e), USAGE_EXIT_CODE)
    except SCKitError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return _report_error(type(e).__name__, str(e), e.exit_code)
    except OSError as e:
        return _report_error("OSError", str(e), 1)


if __name__ == "__main__":
    sys.exit(main())
