"""Configuration: packaged YAML defaults and scenario file parsing."""
from .config_manager import ConfigManager

__all__ = ['ConfigManager']
