"""Pytest fixtures and configuration."""

import os
import random
import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from lspac.models import ModuliSpec


@pytest.fixture(autouse=True)
def environment_isolation():
    """Automatically ensure environment isolation for all tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        tmpdir_path = Path(tmpdir)

        default_env = {
            "LSPAC_LOG_LEVEL": "WARNING",
            "LSPAC_LOG_DIR": str(tmpdir_path / "logs"),
            "LSPAC_LOG_TO_FILE": "false",
            "LSPAC_WORKERS": "0",
        }

        with patch.dict(os.environ, default_env):
            yield tmpdir_path


@pytest.fixture
def temp_dir(environment_isolation):
    """Get the temporary directory path from environment isolation."""
    return environment_isolation


@pytest.fixture
def runner():
    """Click runner with stderr kept apart from stdout."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always separates the streams
        return CliRunner()


@pytest.fixture
def rng():
    """Seeded generator so random checks are reproducible."""
    return random.Random(20240917)


@pytest.fixture
def random_spec(rng):
    """Factory for random eventually periodic specs over small digits."""

    def make(max_digit: int = 6, max_pre: int = 3, max_period: int = 4) -> ModuliSpec:
        pre = tuple(rng.randint(2, max_digit) for _ in range(rng.randint(0, max_pre)))
        per = tuple(rng.randint(2, max_digit) for _ in range(rng.randint(1, max_period)))
        return ModuliSpec(pre, per)

    return make
