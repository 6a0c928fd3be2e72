"""
Base class for registered case analyses.

Each case enumerates a finite parameter domain, applies its constraints
and returns an outcome that is compared with a pinned expected value.
Steps that rest on facts the tool cannot recompute are recorded as
data assertions; geometric steps outside the numeric scope are recorded
as out-of-scope. Both stay visible in the report.
"""

import logging
import time
from abc import ABC, abstractmethod
from typing import Any, List

from models import AuditReport, AuditStep, CheckStatus, StepKind
from utils import to_jsonable

logger = logging.getLogger(__name__)


class AuditCase(ABC):
    """
    Abstract base class for audit cases.

    Attributes:
        case_id: Registry key, e.g. "sl28.curve-scan"
        anchor: Lemma or section the case reproduces
        quote: Verbatim fragment of the statement being checked
        expected: Pinned outcome (plain JSON data after to_jsonable)
    """

    case_id: str = ""
    anchor: str = ""
    quote: str = ""
    expected: Any = None

    def __init__(self):
        self._steps: List[AuditStep] = []

    # ----- transcript -----

    def computed(self, description: str, value: Any = None) -> Any:
        """Record a step established by computation; returns `value`."""
        self._steps.append(AuditStep(kind=StepKind.COMPUTED, description=description, value=to_jsonable(value)))
        return value

    def assert_data(self, description: str, value: Any = None) -> Any:
        """Record an external classification fact used as input."""
        self._steps.append(AuditStep(kind=StepKind.DATA_ASSERTION, description=description, value=to_jsonable(value)))
        return value

    def out_of_scope(self, description: str, value: Any = None) -> Any:
        """Record a geometric step that is cited, not recomputed."""
        self._steps.append(AuditStep(kind=StepKind.OUT_OF_SCOPE, description=description, value=to_jsonable(value)))
        return value

    @property
    def steps(self) -> List[AuditStep]:
        return list(self._steps)

    # ----- evaluation -----

    @abstractmethod
    def evaluate(self) -> Any:
        """
        Run the case analysis over its declared domain.

        Returns:
            The outcome, in any form to_jsonable understands
        """
        pass

    def run(self) -> AuditReport:
        """
        Evaluate and compare with the expected outcome.

        Returns:
            AuditReport with status pass iff computed == expected exactly
        """
        self._steps = []
        start = time.time()
        logger.info(f"🔄 {self.case_id}: evaluating")
        computed = to_jsonable(self.evaluate())
        expected = to_jsonable(self.expected)
        status = CheckStatus.PASS if computed == expected else CheckStatus.FAIL
        elapsed = time.time() - start
        if status == CheckStatus.PASS:
            logger.info(f"✅ {self.case_id}: pass ({elapsed:.2f}s, {len(self._steps)} steps)")
        else:
            logger.error(f"❌ {self.case_id}: computed {computed!r}, expected {expected!r}")
        return AuditReport(
            case_id=self.case_id,
            status=status,
            computed=computed,
            expected=expected,
            steps=list(self._steps),
            ms=int(elapsed * 1000),
        )
