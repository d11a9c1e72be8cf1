"""Shared pytest fixtures for all tests."""

import pytest
import tempfile
from pathlib import Path

from hypothesis import HealthCheck, settings as hypothesis_settings

from src.config import get_settings
from src.models import RunConfig, Subcommand
from src.rings import RingDescriptor
from src.storage import DatabaseManager
from src.twisted import TwistedAlgebra

# Shared hypothesis profile for the exact-arithmetic tests
hypothesis_settings.register_profile(
    "tdp", deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow]
)
hypothesis_settings.load_profile("tdp")


@pytest.fixture(autouse=True)
def reset_settings_cache(monkeypatch, tmp_path):
    """Give every test fresh settings and a private database path."""
    monkeypatch.setenv("TDP_DUCKDB_PATH", str(tmp_path / "tdp.duckdb"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def temp_db():
    """Create a file-backed DuckDB database for testing."""
    with tempfile.TemporaryDirectory() as tmpdir:
        db_path = Path(tmpdir) / "test.duckdb"
        db = DatabaseManager(db_path=db_path)
        db.init_schema()
        yield db
        db.close()


@pytest.fixture
def temp_db_memory():
    """Create an in-memory DuckDB database (faster for unit tests)."""
    db = DatabaseManager(db_path=Path(":memory:"))
    db.init_schema()
    yield db
    db.close()


@pytest.fixture
def zt() -> RingDescriptor:
    return RingDescriptor.parse("Zt")


@pytest.fixture
def zts() -> RingDescriptor:
    return RingDescriptor.parse("Zts")


@pytest.fixture
def cycf2() -> RingDescriptor:
    return RingDescriptor.parse("CycF:2")


@pytest.fixture
def cycf3() -> RingDescriptor:
    return RingDescriptor.parse("CycF:3")


@pytest.fixture
def alg_zt(zt) -> TwistedAlgebra:
    """Z[t][x] with sigma(x) = qx."""
    return TwistedAlgebra.polynomial(zt)


@pytest.fixture
def alg_zts(zts) -> TwistedAlgebra:
    """Z[t, s][x] with sigma(x) = qx + h."""
    return TwistedAlgebra.polynomial(zts)


@pytest.fixture
def alg_cycf2(cycf2) -> TwistedAlgebra:
    return TwistedAlgebra.polynomial(cycf2)


@pytest.fixture
def alg_cycf3(cycf3) -> TwistedAlgebra:
    return TwistedAlgebra.polynomial(cycf3)


@pytest.fixture
def make_config():
    """Factory for RunConfig objects with test defaults."""

    def _make(subcommand: Subcommand = Subcommand.VERIFY, **kwargs) -> RunConfig:
        return RunConfig(subcommand=subcommand, **kwargs)

    return _make
