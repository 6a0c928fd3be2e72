"""
Configuration for klein-verify.

Module-level constants, environment overrides and logging setup.
"""

import os
import logging
import contextvars
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Logging Configuration with check-id context
LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVEL: int = getattr(logging, os.getenv("KLEIN_VERIFY_LOG_LEVEL", "INFO").upper(), logging.INFO)

_active_check: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("active_check", default=None)


class ContextFilter(logging.Filter):
    """Stamp each record with the id of the check currently running."""

    def filter(self, record: logging.LogRecord) -> bool:
        check_id = _active_check.get()
        record.check_id = check_id or "-"
        if check_id and not str(record.msg).startswith("["):
            record.msg = f"[{check_id}] {record.msg}"
        return True


def set_active_check(check_id: Optional[str]) -> contextvars.Token:
    """Mark `check_id` as active for log records emitted in this context."""
    return _active_check.set(check_id)


def reset_active_check(token: contextvars.Token) -> None:
    _active_check.reset(token)


logging.basicConfig(format=LOG_FORMAT, level=LOG_LEVEL)
for handler in logging.root.handlers:
    handler.addFilter(ContextFilter())
logger = logging.getLogger(__name__)


def get_env_int(key: str, default: int) -> int:
    """
    Read an integer from the environment.

    Malformed values are logged and replaced by the default.

    Args:
        key: Environment variable name
        default: Value used when unset or malformed

    Returns:
        Parsed integer
    """
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip())
    except ValueError:
        logger.warning("⚠️ %s=%r is not an integer, using %d", key, raw, default)
        return default


# ============ Tool ============
TOOL_VERSION: str = "1.0.0"

# ============ Paths ============
ROOT_DIR: Path = Path(__file__).resolve().parent
DATA_DIR: Path = ROOT_DIR / "data"
GROUP_DATA_DIR: Path = DATA_DIR / "groups"
TABLE_DATA_DIR: Path = DATA_DIR / "tables"
FANO_TABLE_PATH: Path = DATA_DIR / "fano3.txt"
REGISTRY_PATH: Path = DATA_DIR / "registry.txt"
COVERAGE_PATH: Path = DATA_DIR / "coverage.txt"
CACHE_DIR: str = os.getenv("KLEIN_VERIFY_CACHE_DIR", ".verify-cache")

# ============ Resource Caps ============
CLOSURE_CAP: int = 10**6
DIXON_PRIME_CAP: int = 10**6
MULT_TABLE_MAX_ORDER: int = 1100
SUBGROUP_SEARCH_MAX_ORDER: int = 1000
GENUS_SEARCH_MAX_ORDER: int = 1000
MAX_GROUP_ORDER: int = get_env_int("KLEIN_VERIFY_MAX_ORDER", 60000)
MAX_MONOMIALS: int = get_env_int("KLEIN_VERIFY_MAX_MONOMIALS", 10000)
SEARCH_CAP: int = get_env_int("KLEIN_VERIFY_SEARCH_CAP", 5_000_000)

# ============ Execution ============
DEFAULT_JOBS: int = max(1, get_env_int("KLEIN_VERIFY_JOBS", 1))

# ============ Smoothness Certificates ============
DEFAULT_CERT_PRIMES: tuple = (11, 13, 17, 19, 23, 29, 31)
