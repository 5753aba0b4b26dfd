from pathlib import Path

import pytest

from qbalance.config import configure_logging, get_settings
from qbalance.core import make_params

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def _logging_to_current_stderr():
    """Bind structlog to the stderr stream active for each test (pytest swaps it per test)."""
    configure_logging("WARNING")


@pytest.fixture
def fixture_text():
    def read(name: str) -> str:
        return (FIXTURES / name).read_text(encoding="utf-8")

    return read


@pytest.fixture
def fresh_settings(monkeypatch):
    """Clear cached settings and parameters around a test that changes QBALANCE_* variables."""
    get_settings.cache_clear()
    make_params.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()
    make_params.cache_clear()
