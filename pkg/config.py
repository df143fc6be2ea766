"""
Runtime Settings
Search budgets, pruning switches, logging level and output locations read from the environment
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv, find_dotenv

# Load environment variables from .env file.
# This is robust to different working directories (e.g., running from another folder).
_DOTENV_PATH = find_dotenv(usecwd=True) or str(Path(__file__).resolve().parent / ".env")
load_dotenv(dotenv_path=_DOTENV_PATH, override=False)

DEFAULT_NODE_LIMIT = 1_000_000_000
_TRUE_WORDS = {"1", "true", "yes", "on"}
_FALSE_WORDS = {"0", "false", "no", "off"}


@dataclass(frozen=True)
class Settings:
    """Defaults for CLI flags and solver behaviour"""
    threads: int = 1
    node_limit: Optional[int] = DEFAULT_NODE_LIMIT
    time_limit: Optional[float] = None
    prune_with_bounds: bool = True
    prune_with_lines: bool = True
    log_level: str = "WARNING"
    output_dir: str = "solutions"


def _int_env(name: str, default: Optional[int]) -> Optional[int]:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _float_env(name: str, default: Optional[float]) -> Optional[float]:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = float(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be a number of seconds, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _bool_env(name: str, default: bool) -> bool:
    raw = (os.getenv(name) or "").strip().lower()
    if not raw:
        return default
    if raw in _TRUE_WORDS:
        return True
    if raw in _FALSE_WORDS:
        return False
    raise ValueError(f"{name} must be one of {sorted(_TRUE_WORDS | _FALSE_WORDS)}, got {raw!r}")


def load_settings() -> Settings:
    """Read QDOM_* variables (after the .env lookup above) into a Settings value."""
    return Settings(
        threads=_int_env("QDOM_THREADS", 1),
        node_limit=_int_env("QDOM_NODE_LIMIT", DEFAULT_NODE_LIMIT),
        time_limit=_float_env("QDOM_SECONDS", None),
        prune_with_bounds=_bool_env("QDOM_PRUNE_BOUNDS", True),
        prune_with_lines=_bool_env("QDOM_PRUNE_LINES", True),
        log_level=(os.getenv("QDOM_LOG_LEVEL") or "WARNING").strip().upper(),
        output_dir=(os.getenv("QDOM_OUTPUT_DIR") or "solutions").strip(),
    )
