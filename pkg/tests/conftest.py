"""
Pytest configuration and shared fixtures for SCKit tests.
"""

import tempfile
from pathlib import Path

import numpy as np
import pytest

from sckit.sckit_core.domain import LabeledSample, TaskKind
from sckit.sckit_learners import draw_sample, random_bv_target, random_threshold_target


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(12345)


@pytest.fixture
def small_real_sample():
    """Four one-dimensional points with labels in [0, 1]."""
    return LabeledSample(points=[0.1, 0.4, 0.6, 0.9], labels=[0.0, 0.5, 0.5, 1.0])


@pytest.fixture
def small_binary_sample():
    """A threshold sample: label 1 from 0.4 upwards."""
    return LabeledSample(
        points=[0.1, 0.3, 0.5, 0.7], labels=[0, 0, 1, 1], task=TaskKind.BINARY
    )


@pytest.fixture
def bv_sample():
    """m = 200 sample of a random BV(1) step function."""
    target_rng, sample_rng = np.random.default_rng(7).spawn(2)
    return draw_sample(random_bv_target(1.0, target_rng), 200, sample_rng)


@pytest.fixture
def threshold_sample():
    """m = 100 sample of a random threshold classifier."""
    target_rng, sample_rng = np.random.default_rng(3).spawn(2)
    return draw_sample(random_threshold_target(target_rng), 100, sample_rng, task=TaskKind.BINARY)


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)
