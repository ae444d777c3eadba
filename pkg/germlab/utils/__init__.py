"""Shared helpers: logging setup and the exception hierarchy"""

from .errors import (
    GermLabError,
    InvalidInputError,
    InvariantViolation,
    ArithmeticOverflow,
    EnumerationRefused,
)
from .logging_config import setup_logging, get_logger, configure_file_logging

__all__ = [
    "GermLabError",
    "InvalidInputError",
    "InvariantViolation",
    "ArithmeticOverflow",
    "EnumerationRefused",
    "setup_logging",
    "get_logger",
    "configure_file_logging",
]
