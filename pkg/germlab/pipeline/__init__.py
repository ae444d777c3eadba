"""Verification suites and the harness that runs them"""

from .harness import all_ok, run_suite, run_suites
from .suites import ALIASES, SUITES, Failure, VerifyReport, expand_names

__all__ = [
    "ALIASES",
    "SUITES",
    "Failure",
    "VerifyReport",
    "all_ok",
    "expand_names",
    "run_suite",
    "run_suites",
]
