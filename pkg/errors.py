"""
Exception hierarchy for klein-verify.

Library code raises these; only the orchestrator turns them into
check records (CapExceeded becomes a skip, everything else a failure).
"""

from typing import Any, List, Optional


class VerifyError(Exception):
    """Base class for all verification errors."""

    exit_code: int = 1

    def __init__(self, message: str, *, detail: Optional[Any] = None):
        super().__init__(message)
        self.detail = detail


class ParseError(VerifyError):
    """Malformed cyclotomic expression, group file, ctab file or manifest row."""

    exit_code = 2

    def __init__(self, message: str, *, source: str = "", line: int = 0):
        where = f"{source}:{line}: " if source and line else (f"{source}: " if source else "")
        super().__init__(f"{where}{message}")
        self.source = source
        self.line = line


class ArithmeticDomainError(VerifyError, ArithmeticError):
    """Operation outside the domain of exact arithmetic (zero division, bad Galois index)."""


class GroupError(VerifyError):
    """Generator data does not produce the declared group."""


class CapExceeded(VerifyError):
    """A resource cap was hit; carries the undecided items."""

    def __init__(self, message: str, *, undecided: Optional[List[Any]] = None):
        super().__init__(message, detail=undecided)
        self.undecided = list(undecided or [])


class TableError(VerifyError):
    """A character table violates a named relation."""

    def __init__(self, relation: str, message: str):
        super().__init__(f"{relation}: {message}")
        self.relation = relation


class NotACharacterError(VerifyError):
    """A class function decomposed with a non-integral or negative multiplicity."""


class DataError(VerifyError):
    """Missing or corrupt bundled data."""

    exit_code = 2


class UnknownCaseError(VerifyError, KeyError):
    """Audit or check id not registered."""

    exit_code = 2

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown case"


class ConfigError(VerifyError):
    """Invalid suite configuration."""

    exit_code = 2
