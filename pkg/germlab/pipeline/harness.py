"""
Verification harness - runs suites, fans them out over threads, merges reports
"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from .suites import SUITES, CaseRecorder, VerifyReport, expand_names
from ..config.loader import Cfg, default_config
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


def run_suite(name: str, bound: int, max_degree: int) -> VerifyReport:
    """
    Run one suite

    Args:
        name: Suite name (not an alias)
        bound: Sweep bound, interpreted per suite and capped at the suite's max_bound
        max_degree: Exhaustive enumeration cap for the monodromy suites

    Returns:
        VerifyReport with failures sorted by case key
    """
    suite = SUITES[name]
    if suite.max_bound is not None and bound > suite.max_bound:
        logger.info(f"suite {name}: bound {bound} clamped to {suite.max_bound}")
        bound = suite.max_bound
    logger.info(f"suite {name} starting (bound {bound})")
    rec = CaseRecorder(name)
    started = time.perf_counter()
    suite.run(rec, bound, max_degree)
    elapsed = time.perf_counter() - started
    report = VerifyReport(
        suite=name,
        bound=bound,
        cases=rec.cases,
        failures=sorted(rec.failures, key=lambda f: (f.case, f.inputs)),
        wall_time_s=round(elapsed, 3),
    )
    logger.info(f"suite {name} finished: {report.cases} cases, {len(report.failures)} failures in {elapsed:.2f}s")
    return report


def run_suites(
    names: List[str],
    bound: Optional[int] = None,
    threads: Optional[int] = None,
    cfg: Optional[Cfg] = None,
) -> List[VerifyReport]:
    """
    Run suites (aliases allowed) and merge their reports

    Args:
        names: Suite names or aliases
        bound: One bound for every suite; per-suite config bounds when None
        threads: Worker threads; config value when None
        cfg: Configuration, defaults when None

    Returns:
        Reports sorted by suite name, independent of completion order

    Raises:
        InvalidInputError: On an unknown suite name
    """
    cfg = cfg or default_config()
    suites = expand_names(names)
    workers = threads or cfg.workers.threads
    max_degree = cfg.enumeration.max_degree

    def job(name: str) -> VerifyReport:
        return run_suite(name, bound if bound is not None else cfg.verify.bound_for(name), max_degree)

    if workers > 1 and len(suites) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(job, suites))
    else:
        reports = [job(name) for name in suites]

    return sorted(reports, key=lambda r: r.suite)


def all_ok(reports: List[VerifyReport]) -> bool:
    return all(r.ok for r in reports)
