"""
Configuration management utilities.
This module follows the Single Responsibility Principle by focusing
solely on configuration loading and management.
"""
import yaml
from typing import Dict, Any, Iterable, Optional, Union
from pathlib import Path

from exceptions import ConfigError


class ConfigManager:
    """
    Manages configuration loading and access.

    Packaged defaults live next to this module as YAML files; scenario
    files given on the command line are read with ``load_scenario_file``.
    """

    DEFAULT_CONFIG = "rheolab_config"

    def __init__(self, config_dir: Optional[str] = None):
        """
        Initialize the configuration manager.

        Args:
            config_dir: Directory containing configuration files
        """
        if config_dir is None:
            self.config_dir = Path(__file__).parent
        else:
            self.config_dir = Path(config_dir)

        self._configs: Dict[str, Dict[str, Any]] = {}

    def load_config(self, config_name: str) -> Dict[str, Any]:
        """
        Load a configuration file.

        Args:
            config_name: Name of the configuration file (without extension)

        Returns:
            Dict[str, Any]: Configuration data

        Raises:
            ConfigError: If the file is missing or is not valid YAML
        """
        if config_name in self._configs:
            return self._configs[config_name]

        config_path = self.config_dir / f"{config_name}.yaml"

        if not config_path.exists():
            raise ConfigError(f"Configuration file not found: {config_path}")

        try:
            with open(config_path, 'r', encoding='utf-8') as file:
                config_data = yaml.safe_load(file) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in {config_path}: {e}") from e

        self._configs[config_name] = config_data
        return config_data

    def get_config(self, config_name: str, key_path: Optional[str] = None) -> Any:
        """
        Get configuration value by key path.

        Args:
            config_name: Name of the configuration
            key_path: Dot-separated path to the value (e.g., "simulation.dt")

        Returns:
            Any: Configuration value

        Raises:
            KeyError: If key path doesn't exist
        """
        config = self.load_config(config_name)

        if key_path is None:
            return config

        value = config
        for key in key_path.split('.'):
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                raise KeyError(f"Key path '{key_path}' not found in configuration '{config_name}'")

        return value

    def get_simulation_config(self) -> Dict[str, Any]:
        """Simulation defaults (t_end, dt, record_every, ramp_time)."""
        return dict(self.get_config(self.DEFAULT_CONFIG, "simulation"))

    def get_tolerances(self) -> Dict[str, float]:
        """Numerical admissibility thresholds."""
        return {k: float(v) for k, v in self.get_config(self.DEFAULT_CONFIG, "tolerances").items()}

    def get_verification_config(self) -> Dict[str, Any]:
        """Settings for oscillatory moduli verification."""
        return dict(self.get_config(self.DEFAULT_CONFIG, "verification"))

    @staticmethod
    def load_scenario_file(path: Union[str, Path], raw_keys: Iterable[str] = ()) -> Dict[str, Any]:
        """
        Read a scenario file.

        ``.yaml``/``.yml`` files are read as YAML mappings. Anything else is
        line-oriented ``key = value`` text with ``#`` comments, each value
        parsed as a YAML scalar so numbers and booleans come back typed.

        Args:
            path: Scenario file path
            raw_keys: Keys whose values are kept as the literal text

        Returns:
            Dict[str, Any]: Raw scenario values

        Raises:
            ConfigError: On unreadable files or malformed lines
        """
        path = Path(path)
        try:
            text = path.read_text(encoding='utf-8')
        except OSError as e:
            raise ConfigError(f"Cannot read scenario file {path}: {e}") from e

        if path.suffix in ('.yaml', '.yml'):
            try:
                data = yaml.safe_load(text) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Invalid YAML in {path}: {e}") from e
            if not isinstance(data, dict):
                raise ConfigError(f"Scenario file {path} must hold a mapping")
            return data

        return ConfigManager.parse_key_value_text(text, source=str(path), raw_keys=raw_keys)

    @staticmethod
    def parse_key_value_text(text: str, source: str = "<text>", raw_keys: Iterable[str] = ()) -> Dict[str, Any]:
        """
        Parse ``key = value`` lines.

        Args:
            text: File contents
            source: Name used in error messages
            raw_keys: Keys whose values are kept as the literal text

        Returns:
            Dict[str, Any]: Parsed values; later keys override earlier ones
        """
        raw_keys = set(raw_keys)
        values: Dict[str, Any] = {}
        for lineno, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw_line!r}")
            key, value = (part.strip() for part in line.split('=', 1))
            if not key:
                raise ConfigError(f"{source}:{lineno}: empty key")
            key = key.replace('-', '_')
            values[key] = value if key in raw_keys else ConfigManager._parse_scalar(value)
        return values

    @staticmethod
    def _parse_scalar(value: str) -> Any:
        # Protocol specs ("osc:gamma0=0.01,omega=2") and network text are kept verbatim.
        if ':' in value or '(' in value or ',' in value:
            return value
        # YAML 1.1 reads "1e-3" as a string.
        for cast in (int, float):
            try:
                return cast(value)
            except ValueError:
                pass
        try:
            return yaml.safe_load(value) if value else None
        except yaml.YAMLError:
            return value
