"""
Registered case analyses with pinned outcomes.

Importing the package imports every case module, which fills REGISTRY.
"""

from audits.registry import (
    REGISTRY,
    ManifestRow,
    register,
    audit_ids,
    get_case,
    parse_manifest,
    load_manifest,
    parse_coverage,
    load_coverage,
    verify_expected,
    run_audit,
)
from audits.base import AuditCase
from audits import (  # noqa: F401  registration side effects
    cases_sl28,
    cases_a7_burkhardt,
    cases_klein,
    cases_gorenstein,
    cases_nongor,
    cases_link,
    cases_curves,
)

__all__ = [
    "REGISTRY",
    "ManifestRow",
    "AuditCase",
    "register",
    "audit_ids",
    "get_case",
    "parse_manifest",
    "load_manifest",
    "parse_coverage",
    "load_coverage",
    "verify_expected",
    "run_audit",
]
