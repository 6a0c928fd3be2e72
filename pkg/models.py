"""
Pydantic models for klein-verify.

This module defines the data models for:
- Suite configuration (input)
- Check and audit records
- The run report (output)
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from config import CACHE_DIR, DEFAULT_JOBS, MAX_GROUP_ORDER, MAX_MONOMIALS, TOOL_VERSION


class Suite(str, Enum):
    """Check suites selectable from the command line."""
    ALL = "all"
    GROUPS = "groups"
    CHARS = "chars"
    INVARIANTS = "invariants"
    RR = "rr"
    AUDITS = "audits"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class StepKind(str, Enum):
    """How an audit step is established."""
    COMPUTED = "computed"
    DATA_ASSERTION = "data-assertion"
    OUT_OF_SCOPE = "out-of-scope"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class CertificateVerdict(str, Enum):
    CERTIFIED = "certified"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"


class SuiteConfig(BaseModel):
    """
    Validated run configuration.

    Unknown suites and malformed ids are rejected here, before any
    group is built.
    """
    suite: Suite = Field(default=Suite.ALL, description="Suite selector")
    case_ids: List[str] = Field(default_factory=list, description="Restrict to these check or audit ids")
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description="Report format")
    output_path: Optional[str] = Field(default=None, description="Also write the JSON report here")
    jobs: int = Field(default=DEFAULT_JOBS, ge=1, description="Worker threads per suite")
    cache_dir: Optional[str] = Field(default=CACHE_DIR, description="Character table cache, None disables it")
    max_order: int = Field(default=MAX_GROUP_ORDER, ge=1, description="Largest group order to materialize")
    max_monomials: int = Field(default=MAX_MONOMIALS, ge=1, description="Largest monomial basis")

    @field_validator("case_ids")
    @classmethod
    def validate_case_ids(cls, v: List[str]) -> List[str]:
        """Strip ids and reject empty ones."""
        out = []
        for item in v:
            item = item.strip()
            if not item:
                raise ValueError("case id cannot be empty")
            out.append(item)
        return out

    def selects(self, suite: Suite) -> bool:
        return self.suite in (Suite.ALL, suite)


class AuditStep(BaseModel):
    """One line of an audit transcript."""
    kind: StepKind = Field(..., description="computed, data-assertion or out-of-scope")
    description: str = Field(..., description="What the step establishes")
    value: Any = Field(default=None, description="Value computed or asserted")


class AuditReport(BaseModel):
    """Outcome of one registered case analysis."""
    case_id: str
    status: CheckStatus
    computed: Any = None
    expected: Any = None
    steps: List[AuditStep] = Field(default_factory=list)
    ms: int = Field(default=0, ge=0, description="Wall time in milliseconds")

    @field_validator("status")
    @classmethod
    def validate_status(cls, v: CheckStatus) -> CheckStatus:
        if v == CheckStatus.SKIP:
            raise ValueError("audits are pure computations and cannot be skipped")
        return v


class CertificateRecord(BaseModel):
    """Serialized smoothness certificate."""
    label: str = ""
    poly_hash: str
    p: int
    degree: int
    rows: int
    cols: int
    rank: int
    verdict: CertificateVerdict


class CheckRecord(BaseModel):
    """One report row."""
    id: str
    suite: Suite
    status: CheckStatus
    expected: Any = None
    actual: Any = None
    anchor: str = Field(default="", description="Lemma or table the check reproduces")
    ms: int = Field(default=0, ge=0)
    detail: Optional[str] = Field(default=None, description="Failure or skip reason")
    steps: List[AuditStep] = Field(default_factory=list)
    undecided: List[Any] = Field(default_factory=list)
    certificates: List[CertificateRecord] = Field(default_factory=list)


class RunSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    data_assertions: int = 0

    @classmethod
    def from_records(cls, records: List[CheckRecord]) -> "RunSummary":
        return cls(
            total=len(records),
            passed=sum(r.status == CheckStatus.PASS for r in records),
            failed=sum(r.status == CheckStatus.FAIL for r in records),
            skipped=sum(r.status == CheckStatus.SKIP for r in records),
            data_assertions=sum(s.kind == StepKind.DATA_ASSERTION for r in records for s in r.steps),
        )


class RunReport(BaseModel):
    """Top-level report; exit status 0 iff there are no failures and no fatal errors."""
    version: str = TOOL_VERSION
    data_hashes: Dict[str, str] = Field(default_factory=dict)
    records: List[CheckRecord] = Field(default_factory=list)
    summary: RunSummary = Field(default_factory=RunSummary)
    errors: List[str] = Field(default_factory=list, description="Configuration or data errors that stopped the run")

    @property
    def exit_code(self) -> int:
        if self.errors:
            return 2
        return 1 if self.summary.failed else 0

    def without_timing(self) -> Dict[str, Any]:
        data = self.model_dump(mode="json")
        for rec in data["records"]:
            rec["ms"] = 0
        return data
