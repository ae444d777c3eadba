"""Configuration loading for germ-lab"""

from .loader import Cfg, load_config, validate_config, default_config

__all__ = ["Cfg", "load_config", "validate_config", "default_config"]
