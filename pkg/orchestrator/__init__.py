"""
Orchestrator package for klein-verify.

Uses LangGraph StateGraph to run the check suites.
"""

from orchestrator.state import WorkflowState, create_initial_state
from orchestrator.checks import CATALOGUE, Check, RunContext, all_checks, check_coverage, run_check, run_checks, select_checks
from orchestrator.workflow import create_workflow, run_workflow, build_report

__all__ = [
    "WorkflowState",
    "create_initial_state",
    "CATALOGUE",
    "Check",
    "RunContext",
    "all_checks",
    "check_coverage",
    "run_check",
    "run_checks",
    "select_checks",
    "create_workflow",
    "run_workflow",
    "build_report",
]
