"""
User settings stored in ~/.schubert-points/settings.json.
"""
import os
import json
from typing import Any, Dict

from utils.constants import DEFAULT_FORMAT, DEFAULT_JOBS, OUTPUT_FORMATS, SETTINGS_DIR_NAME, SETTINGS_FILE_NAME
from utils.logging_config import get_logger

logger = get_logger(__name__)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')

DEFAULTS: Dict[str, Any] = {
    'jobs': DEFAULT_JOBS,
    'format': DEFAULT_FORMAT,
    'log_level': 'WARNING',
    'report_dir': None,
}


def _valid(key: str, value: Any) -> bool:
    if key == 'jobs':
        return isinstance(value, int) and not isinstance(value, bool) and value >= 1
    if key == 'format':
        return value in OUTPUT_FORMATS
    if key == 'log_level':
        return value in LOG_LEVELS
    if key == 'report_dir':
        return value is None or isinstance(value, str)
    return False


class SettingsManager:
    """Singleton holding the persisted user settings."""

    _instance = None
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not self._initialized:
            self._settings = dict(DEFAULTS)
            self._extra = {}  # Unknown keys, written back untouched
            self._load_settings()
            SettingsManager._initialized = True

    def _get_settings_dir(self) -> str:
        """Get the settings directory path."""
        home = os.path.expanduser('~')
        settings_dir = os.path.join(home, SETTINGS_DIR_NAME)
        os.makedirs(settings_dir, exist_ok=True)
        return settings_dir

    def _get_settings_file(self) -> str:
        """Get the settings file path."""
        return os.path.join(self._get_settings_dir(), SETTINGS_FILE_NAME)

    def _load_settings(self):
        """Load settings from file, keeping defaults for invalid entries."""
        try:
            settings_file = self._get_settings_file()
            if not os.path.exists(settings_file):
                return
            with open(settings_file, 'r', encoding='utf-8') as f:
                stored = json.load(f)
            if not isinstance(stored, dict):
                logger.warning(f"Ignoring settings file without a JSON object: {settings_file}")
                return
            for key, value in stored.items():
                if key not in DEFAULTS:
                    self._extra[key] = value
                elif _valid(key, value):
                    self._settings[key] = value
                else:
                    logger.warning(f"Invalid value for setting '{key}': {value!r}, using default")
            logger.info(f"Loaded settings from {settings_file}")
        except Exception as e:
            logger.warning(f"Failed to load settings: {e}")
            self._settings = dict(DEFAULTS)

    def _save_settings(self):
        """Save settings to file."""
        try:
            settings_file = self._get_settings_file()
            data = dict(self._extra)
            data.update(self._settings)
            with open(settings_file, 'w', encoding='utf-8') as f:
                json.dump(data, f, indent=2, ensure_ascii=False)
            logger.info(f"Saved settings to {settings_file}")
        except Exception as e:
            logger.warning(f"Failed to save settings: {e}")

    def get(self, key: str) -> Any:
        """
        Get a setting value.

        Args:
            key: One of 'jobs', 'format', 'log_level', 'report_dir'

        Returns:
            Stored value or the default
        """
        if key not in DEFAULTS:
            raise KeyError(key)
        return self._settings[key]

    def set(self, key: str, value: Any):
        """
        Set and persist a setting.

        Args:
            key: Setting name
            value: New value; invalid values are rejected with a warning
        """
        if key not in DEFAULTS:
            logger.warning(f"Unsupported setting: {key}")
            return
        if not _valid(key, value):
            logger.warning(f"Invalid value for setting '{key}': {value!r}")
            return
        self._settings[key] = value
        self._save_settings()


def get_settings_manager() -> SettingsManager:
    """Get the singleton SettingsManager instance."""
    return SettingsManager()
