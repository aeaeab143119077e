"""Pytest configuration and shared fixtures."""

import logging
import sys
from pathlib import Path
from unittest.mock import patch

import pytest

# Add src directory to path for imports
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from utils.constants import LOGGER_NAME, VERDICT_LOGGER_NAME
from utils.data_structures import Partition
from utils.settings_manager import SettingsManager
from shapes.tableaux import parse_tableau


def pytest_configure(config):
    """Register the slow marker used by the n = 8, 9 scale checks."""
    config.addinivalue_line("markers", "slow: exhaustive checks over n = 8 and 9 (deselect with -m 'not slow')")


@pytest.fixture
def shape_221():
    return Partition((2, 2, 1))


@pytest.fixture
def counterexample_shape():
    """(3,1,1,1): four rows and three columns, outside the valid family."""
    return Partition((3, 1, 1, 1))


@pytest.fixture
def counterexample_tableau():
    """Row-strict tableau whose point s3 s4 s5 s2 s3 s1 has a deletion that is not a point."""
    return parse_tableau("1,3,5/2/4/6")


@pytest.fixture
def two_column_tableau():
    """Shape (2,2,2,2,1,1,1) with ell-vector (0,1,2,1,3,4,2,5,2,5)."""
    return parse_tableau("1,2/3,5/4,10/6,8/7/11/9")


@pytest.fixture
def reset_settings_manager():
    """Reset SettingsManager singleton between tests."""
    original_instance = SettingsManager._instance
    original_initialized = SettingsManager._initialized

    SettingsManager._instance = None
    SettingsManager._initialized = False

    yield

    SettingsManager._instance = original_instance
    SettingsManager._initialized = original_initialized


@pytest.fixture
def temp_settings_dir(tmp_path):
    """Create temporary ~/.schubert-points/ directory for testing."""
    settings_dir = tmp_path / ".schubert-points"
    settings_dir.mkdir()

    with patch('os.path.expanduser') as mock_expand:
        mock_expand.return_value = str(tmp_path)
        yield settings_dir


@pytest.fixture
def reset_logger():
    """Drop handlers added by setup_logging so each test starts clean."""
    saved = []
    for name in (LOGGER_NAME, VERDICT_LOGGER_NAME):
        logger = logging.getLogger(name)
        saved.append((logger, list(logger.handlers), logger.level, logger.propagate))
        logger.handlers.clear()
    yield logging.getLogger(LOGGER_NAME)
    for logger, handlers, level, propagate in saved:
        for handler in logger.handlers:
            handler.close()
        logger.handlers[:] = handlers
        logger.setLevel(level)
        logger.propagate = propagate
