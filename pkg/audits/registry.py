"""
Case registry and the pinned-outcome manifest.

Case classes register themselves with @register. The manifest at
data/registry.txt lists every case as

    id | lemma-ref | quote | expected-hash

and the runner refuses to compare against an expected value whose hash
no longer matches its manifest row. data/coverage.txt maps each
in-scope statement to the check and audit ids that reproduce it.
"""

import logging
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Type, Union

from config import COVERAGE_PATH, REGISTRY_PATH
from errors import DataError, ParseError, UnknownCaseError
from models import AuditReport
from utils import value_hash

logger = logging.getLogger(__name__)

REGISTRY: Dict[str, type] = {}


class ManifestRow(NamedTuple):
    case_id: str
    lemma_ref: str
    quote: str
    expected_hash: str


def register(cls: Type) -> Type:
    """Class decorator adding an AuditCase subclass to the registry."""
    if not cls.case_id:
        raise ValueError(f"{cls.__name__} has no case_id")
    if cls.case_id in REGISTRY:
        raise ValueError(f"duplicate audit id {cls.case_id}")
    REGISTRY[cls.case_id] = cls
    return cls


def audit_ids() -> List[str]:
    return sorted(REGISTRY)


def get_case(case_id: str):
    """
    Instantiate a registered case.

    Raises:
        UnknownCaseError: case_id not registered
    """
    try:
        return REGISTRY[case_id]()
    except KeyError:
        raise UnknownCaseError(f"unknown audit id: {case_id}") from None


def parse_manifest(text: str, source: str = "registry") -> Dict[str, ManifestRow]:
    rows: Dict[str, ManifestRow] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        # quotes may contain '|'; the hash is the last field
        head, _, digest = line.rpartition("|")
        fields = [f.strip() for f in head.split("|", 2)]
        if len(fields) < 3:
            raise ParseError("expected 'id | lemma-ref | quote | expected-hash'", source=source, line=lineno)
        case_id, ref, quote = fields
        digest = digest.strip()
        if not case_id or len(digest) != 16 or any(c not in "0123456789abcdef" for c in digest):
            raise ParseError(f"bad id or hash in row {case_id!r}", source=source, line=lineno)
        if case_id in rows:
            raise ParseError(f"duplicate row {case_id}", source=source, line=lineno)
        rows[case_id] = ManifestRow(case_id, ref, quote, digest)
    return rows


_manifest_cache: Dict[str, Dict[str, ManifestRow]] = {}


def load_manifest(path: Union[str, Path] = REGISTRY_PATH) -> Dict[str, ManifestRow]:
    """
    Read and parse the manifest.

    Raises:
        DataError: file missing
        ParseError: malformed row
    """
    path = Path(path)
    key = str(path)
    if key not in _manifest_cache:
        if not path.exists():
            raise DataError(f"registry manifest not found: {path}")
        _manifest_cache[key] = parse_manifest(path.read_text(encoding="utf-8"), source=path.name)
        logger.info(f"✅ Registry manifest: {len(_manifest_cache[key])} rows from {path.name}")
    return _manifest_cache[key]


def verify_expected(case, manifest: Optional[Dict[str, ManifestRow]] = None) -> str:
    """
    Check a case's pinned outcome against its manifest hash.

    Raises:
        DataError: no manifest row, or the hash differs
    """
    manifest = load_manifest() if manifest is None else manifest
    row = manifest.get(case.case_id)
    if row is None:
        raise DataError(f"{case.case_id}: no manifest row")
    digest = value_hash(case.expected)
    if digest != row.expected_hash:
        raise DataError(
            f"{case.case_id}: expected value hash {digest} does not match manifest {row.expected_hash}",
            detail={"computed_hash": digest, "manifest_hash": row.expected_hash},
        )
    return digest


def run_audit(case_id: str, manifest: Optional[Dict[str, ManifestRow]] = None) -> AuditReport:
    """
    Run one registered case after checking its manifest hash.

    Args:
        case_id: Registry key
        manifest: Parsed manifest, loaded from REGISTRY_PATH when None

    Returns:
        AuditReport for the case
    """
    case = get_case(case_id)
    verify_expected(case, manifest)
    return case.run()


def parse_coverage(text: str, source: str = "coverage") -> Dict[str, List[str]]:
    """Parse `topic | id, id, ...` rows into topic -> ids."""
    topics: Dict[str, List[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        topic, sep, ids = line.rpartition("|")
        topic = topic.strip()
        ids = [i.strip() for i in ids.split(",") if i.strip()]
        if not sep or not topic or not ids:
            raise ParseError("expected 'topic | id, id, ...'", source=source, line=lineno)
        if topic in topics:
            raise ParseError(f"duplicate topic {topic!r}", source=source, line=lineno)
        topics[topic] = ids
    return topics


def load_coverage(path: Union[str, Path] = COVERAGE_PATH) -> Dict[str, List[str]]:
    """
    Read the coverage manifest.

    Raises:
        DataError: file missing
        ParseError: malformed row
    """
    path = Path(path)
    if not path.exists():
        raise DataError(f"coverage manifest not found: {path}")
    return parse_coverage(path.read_text(encoding="utf-8"), source=path.name)
