"""
Utility functions for klein-verify.

Canonical JSON for expected values, hashing of data files, and small
text helpers used by the report renderer.
"""

import hashlib
import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Union


def to_jsonable(value: Any) -> Any:
    """
    Convert computed values to plain JSON data.

    Fractions become "a/b" strings (integers stay integers), tuples and
    sets become lists (sets sorted), dict keys become strings.

    Example:
        >>> to_jsonable({(8, 7): Fraction(2, 3)})
        {'8,7': '2/3'}
    """
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, (int, str, float)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=_sort_key)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "_asdict"):
        return to_jsonable(value._asdict())
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    return str(value)


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(str(to_jsonable(x)) for x in k)
    return str(to_jsonable(k))


def _sort_key(v: Any) -> str:
    return json.dumps(v, sort_keys=True)


def canonical_json(value: Any) -> str:
    """Deterministic compact JSON text of `value`."""
    return json.dumps(to_jsonable(value), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def short_hash(text: Union[str, bytes], length: int = 16) -> str:
    """First `length` hex digits of sha256."""
    if isinstance(text, str):
        text = text.encode("utf-8")
    return hashlib.sha256(text).hexdigest()[:length]


def value_hash(value: Any) -> str:
    """Hash of the canonical JSON of a value."""
    return short_hash(canonical_json(value))


def file_hash(path: Union[str, Path]) -> str:
    return short_hash(Path(path).read_bytes())


def truncate_string(s: str, max_length: int = 100) -> str:
    """
    Truncate a string to a maximum length with ellipsis.

    Args:
        s: String to truncate
        max_length: Maximum length including ellipsis

    Returns:
        Truncated string with '...' if necessary
    """
    if len(s) <= max_length:
        return s
    return s[:max_length - 3] + "..."
