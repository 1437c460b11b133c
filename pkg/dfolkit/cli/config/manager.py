"""Configuration management module."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import toml
import yaml

from dfolkit.cli.utils.display import print_error, print_warning
from dfolkit.constants import CONFIG_KEYS

logger = logging.getLogger(__name__)


class ConfigManager:
    """Reads ``.toml``, ``.yml``/``.yaml`` or ``.json`` settings files.

    Only the keys of :data:`dfolkit.constants.CONFIG_KEYS` are recognised;
    anything else is reported and ignored.
    """

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = config_file
        self.config_data: Dict[str, Any] = {}

        if config_file:
            self.load_config()

    def load_config(self) -> Optional[Dict[str, Any]]:
        """Load configuration from file; ``None`` if it cannot be read."""
        if not self.config_file:
            return None

        file_path = Path(self.config_file)
        try:
            content = file_path.read_text(encoding="utf-8")
            ext = file_path.suffix.lower()

            if ext == ".toml":
                data = toml.loads(content)
            elif ext in (".yml", ".yaml"):
                data = yaml.safe_load(content)
            elif ext == ".json":
                data = json.loads(content)
            else:
                print_error(f"Unsupported config file format: {ext}")
                return None
        except (OSError, ValueError, yaml.YAMLError) as e:
            logger.error("cannot load %s: %s", file_path, e)
            print_error(f"Error loading config file: {e}")
            return None

        if not isinstance(data, dict):
            print_error(f"Config file {file_path} does not hold a table of settings")
            return None
        for key in sorted(set(data) - set(CONFIG_KEYS)):
            print_warning(f"Ignoring unknown config key: {key}")
        self.config_data = {k: v for k, v in data.items() if k in CONFIG_KEYS}
        logger.info("loaded config %s: %s", file_path, sorted(self.config_data))
        return self.config_data

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value."""
        return self.config_data.get(key, default)

    def settings(self, overrides: Dict[str, Any]) -> Dict[str, Any]:
        """Defaults, then this file, then every ``overrides`` value that is not ``None``."""
        merged = dict(CONFIG_KEYS)
        merged.update(self.config_data)
        merged.update({k: v for k, v in overrides.items() if v is not None})
        return merged
