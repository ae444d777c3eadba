from dataclasses import dataclass, field
from typing import Dict, Literal, Optional
import os
import pathlib

import yaml

from ..utils.errors import InvalidInputError

OutputFormat = Literal["table", "json", "dot"]

THREADS_ENV = "GERM_LAB_THREADS"
DEFAULT_CONFIG_PATH = "config/config.yaml"
MAX_DEGREE_RANGE = (3, 10)

# Per-suite default bounds; see pipeline.suites for what each bound scales.
DEFAULT_BOUNDS: Dict[str, int] = {
    "prop1-1": 300,
    "thm0-2": 200,
    "thm0-3": 100,
    "stmt3-2": 500,
    "thm4-4": 100,
    "lem4-6": 200,
    "stmt5-3": 7,
    "thm0-4": 12,
}


@dataclass
class LoggingCfg:
    level: str
    format: str


@dataclass
class VerifyCfg:
    default_bound: int
    bounds: Dict[str, int] = field(default_factory=dict)

    def bound_for(self, suite: str) -> int:
        return self.bounds.get(suite, self.default_bound)


@dataclass
class EnumerationCfg:
    max_degree: int


@dataclass
class WorkersCfg:
    threads: int


@dataclass
class OutputCfg:
    format: OutputFormat


@dataclass
class Cfg:
    version: str
    env: str
    logging: LoggingCfg
    verify: VerifyCfg
    enumeration: EnumerationCfg
    workers: WorkersCfg
    output: OutputCfg


def _threads_from_env(fallback: int) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer: {raw!r}")
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer: {raw!r}")
    return value


def _build(data: dict) -> Cfg:
    system = data.get("system", {}) or {}
    logging_cfg = data.get("logging", {}) or {}
    verify = data.get("verify", {}) or {}
    enumeration = data.get("enumeration", {}) or {}
    workers = data.get("workers", {}) or {}
    output = data.get("output", {}) or {}

    bounds = dict(DEFAULT_BOUNDS)
    bounds.update({str(k): int(v) for k, v in (verify.get("bounds", {}) or {}).items()})

    return Cfg(
        version=str(system.get("version", "0.1.0")),
        env=str(system.get("env", "development")),
        logging=LoggingCfg(
            level=logging_cfg.get("level", "INFO"),
            format=logging_cfg.get("format", "%(asctime)s %(levelname)s %(name)s :: %(message)s"),
        ),
        verify=VerifyCfg(
            default_bound=int(verify.get("default_bound", 100)),
            bounds=bounds,
        ),
        enumeration=EnumerationCfg(
            max_degree=int(enumeration.get("max_degree", 8)),
        ),
        workers=WorkersCfg(
            threads=_threads_from_env(int(workers.get("threads", 1))),
        ),
        output=OutputCfg(
            format=output.get("format", "table"),
        ),
    )


def default_config() -> Cfg:
    """Configuration with every section at its default (env overrides still apply)"""
    return _build({})


def load_config(path: Optional[str] = DEFAULT_CONFIG_PATH) -> Cfg:
    """Load configuration from YAML file with validation"""
    try:
        if path is None:
            return default_config()
        config_path = pathlib.Path(path)
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        data = yaml.safe_load(config_path.read_text(encoding="utf-8")) or {}
        if not isinstance(data, dict):
            raise ValueError("top level must be a mapping")

        cfg = _build(data)
        validate_config(cfg)
        return cfg
    except Exception as e:
        raise RuntimeError(f"Failed to load config from {path}: {e}")


def check_max_degree(value: int) -> int:
    """Reject a per-request enumeration cap outside MAX_DEGREE_RANGE"""
    lo, hi = MAX_DEGREE_RANGE
    if not lo <= value <= hi:
        raise InvalidInputError(f"max_degree must be between {lo} and {hi}: {value}")
    return value


def validate_config(cfg: Cfg) -> None:
    """Validate configuration values"""
    lo, hi = MAX_DEGREE_RANGE
    if not lo <= cfg.enumeration.max_degree <= hi:
        raise ValueError(f"enumeration.max_degree must be between {lo} and {hi}: {cfg.enumeration.max_degree}")

    if cfg.workers.threads < 1:
        raise ValueError(f"workers.threads must be positive: {cfg.workers.threads}")

    if cfg.verify.default_bound < 1:
        raise ValueError(f"verify.default_bound must be positive: {cfg.verify.default_bound}")

    for suite, bound in cfg.verify.bounds.items():
        if bound < 1:
            raise ValueError(f"verify.bounds.{suite} must be positive: {bound}")

    if cfg.output.format not in ["table", "json", "dot"]:
        raise ValueError(f"Invalid output format: {cfg.output.format}")

    if cfg.logging.level.upper() not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
        raise ValueError(f"Invalid logging level: {cfg.logging.level}")
