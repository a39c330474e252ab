"""
SCKit CLI Package

Seeded experiment driver: compress/verify round trips, weak-learner
studies, duality probes and compression-size sweeps.
"""

from .commands import cmd_compress, cmd_duality, cmd_sweep, cmd_verify, cmd_weakstudy, make_target
from .config import ExperimentConfig
from .main import create_parser, main

__all__ = [
    "ExperimentConfig",
    "cmd_compress",
    "cmd_duality",
    "cmd_sweep",
    "cmd_verify",
    "cmd_weakstudy",
    "create_parser",
    "main",
    "make_target",
]
