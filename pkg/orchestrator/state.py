"""
Workflow State Schema for LangGraph.

Defines the typed state that flows through the verification workflow.
"""

from typing import TypedDict, List, Dict, Any, Optional, Annotated
import operator

from models import SuiteConfig


def _merge_dicts(left: Dict, right: Dict) -> Dict:
    """Merge two dicts, combining their keys."""
    result = left.copy()
    result.update(right)
    return result


class WorkflowState(TypedDict):
    """
    State schema for the verification workflow.

    records, errors, warnings, logs and metrics carry reducers so the
    suite nodes can update them concurrently (fan-out/fan-in pattern).

    Attributes:
        config: SuiteConfig as JSON data
        data_hashes: bundled file -> short sha256
        records: CheckRecord dicts from every suite node
        errors: Configuration or data errors that stop the run
        warnings: Non-fatal issues (skipped checks, cache problems)
        logs: Timestamped progress lines
        metrics: node -> {elapsed_s, checks, ...}
        report: Final RunReport as JSON data, once the report node ran
        current_step: Name of current workflow step
    """
    config: Dict[str, Any]
    data_hashes: Dict[str, str]

    records: Annotated[List[Dict[str, Any]], operator.add]
    errors: Annotated[List[str], operator.add]
    warnings: Annotated[List[str], operator.add]
    logs: Annotated[List[str], operator.add]
    metrics: Annotated[Dict[str, Dict[str, Any]], _merge_dicts]

    report: Optional[Dict[str, Any]]
    current_step: str


def create_initial_state(config: SuiteConfig) -> WorkflowState:
    """
    Create initial workflow state for a run.

    Example:
        >>> state = create_initial_state(SuiteConfig(suite="rr"))
        >>> state["current_step"]
        'initialized'
    """
    return WorkflowState(
        config=config.model_dump(mode="json"),
        data_hashes={},
        records=[],
        errors=[],
        warnings=[],
        logs=["Workflow initialized"],
        metrics={},
        report=None,
        current_step="initialized",
    )
