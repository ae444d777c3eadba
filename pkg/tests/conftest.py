"""
Pytest configuration and fixtures
"""

import pytest
import tempfile
from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def temp_dir():
    """Create temporary directory for tests"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def sample_config_file(temp_dir):
    """Create sample config file for testing"""
    config_content = """
system:
  version: "0.1.0"
  env: "test"

logging:
  level: "DEBUG"
  format: "%(levelname)s %(name)s :: %(message)s"

verify:
  default_bound: 20
  bounds:
    prop1-1: 40
    stmt5-3: 5

enumeration:
  max_degree: 6

workers:
  threads: 2

output:
  format: "json"
"""

    config_path = temp_dir / "test_config.yaml"
    config_path.write_text(config_content.strip())
    return config_path


@pytest.fixture
def golden():
    """Read a golden file from tests/golden"""

    def read(name):
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")

    return read


@pytest.fixture(autouse=True)
def clear_threads_env(monkeypatch):
    """Keep GERM_LAB_THREADS from the calling shell out of config tests"""
    monkeypatch.delenv("GERM_LAB_THREADS", raising=False)


# Test configuration
def pytest_configure(config):
    """Configure pytest settings"""
    config.addinivalue_line(
        "markers",
        "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers",
        "integration: marks tests as integration tests"
    )
