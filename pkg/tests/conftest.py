"""Pytest configuration and fixtures."""

import pytest

from qpdt_cli.core.models import IntegrationConfig
from qpdt_cli.transform.functions import TestFunction

QPDT_ENV = [
    "QPDT_THREADS", "QPDT_L", "QPDT_PANELS", "QPDT_ORDER", "QPDT_TOL",
    "QPDT_W_LIMIT", "QPDT_W_LIMIT_MAX", "QPDT_JACOBI_ORDER", "QPDT_LOG_LEVEL",
]


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No QPDT_ variables and no project .env file."""
    for key in QPDT_ENV:
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def cfg():
    """Default integration settings, single-threaded."""
    return IntegrationConfig()


@pytest.fixture
def small_cfg():
    """Coarser settings for the nested translation and convolution integrals."""
    return IntegrationConfig(L=8.0, panels=32, order=10)


@pytest.fixture
def gaussian():
    return TestFunction(name="gaussian")


@pytest.fixture
def hermite():
    return TestFunction(name="hermite_gaussian", shape=(1.0, 1.0))
