"""conftest.py — Shared pytest setup: the `slow` marker and a quiet library log."""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from core.utils import RunConfig, set_quiet  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive n=5/6 census runs")


@pytest.fixture(autouse=True)
def _quiet_log():
    set_quiet(True)
    yield
    set_quiet(False)


@pytest.fixture
def cfg():
    return RunConfig(worker_count=1, budget_seconds=600)
