"""
LangGraph workflow for a verification run.

START -> prepare -> [groups, chars, invariants, rr, audits] -> validate -> report/END
"""

import logging
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from langgraph.graph import StateGraph, END

from audits import load_manifest
from config import DATA_DIR
from errors import VerifyError
from models import CheckRecord, CheckStatus, RunReport, RunSummary, Suite, SuiteConfig
from orchestrator.checks import RunContext, check_coverage, run_checks, select_checks
from orchestrator.state import WorkflowState, create_initial_state
from utils import file_hash

logger = logging.getLogger(__name__)

SUITE_NODES = (Suite.GROUPS, Suite.CHARS, Suite.INVARIANTS, Suite.RR, Suite.AUDITS)
DATA_PATTERNS = ("groups/*.grp", "tables/*.ctab", "*.txt")


def hash_data_files(root: Path = DATA_DIR) -> Dict[str, str]:
    """Short sha256 of every bundled data file, keyed by path relative to root."""
    hashes = {}
    for pattern in DATA_PATTERNS:
        for path in sorted(root.glob(pattern)):
            hashes[path.relative_to(root).as_posix()] = file_hash(path)
    return hashes


# ===== Node Functions =====

def prepare_node(state: WorkflowState) -> Dict[str, Any]:
    """
    Node: validate the configuration and fingerprint the bundled data.

    Unknown ids and a missing or malformed manifest or coverage file
    stop the run here, before any group is built.
    """
    start_time = time.time()
    logger.info("🔄 Prepare: Starting")
    try:
        config = SuiteConfig.model_validate(state["config"])
        selected = select_checks(config)
        hashes = hash_data_files()
        load_manifest()
        check_coverage()
    except (VerifyError, ValueError) as e:
        logger.error(f"❌ Prepare: Failed - {e}")
        return {
            "current_step": "prepare_failed",
            "errors": [f"{type(e).__name__}: {e}"],
            "logs": [f"{datetime.now().isoformat()} - Prepare: FAILED"],
        }

    elapsed = time.time() - start_time
    counts = {suite.value: len(checks) for suite, checks in selected.items() if checks}
    logger.info(f"✅ Prepare: {sum(counts.values())} checks selected, {len(hashes)} data files ({elapsed:.2f}s)")
    return {
        "current_step": "prepared",
        "data_hashes": hashes,
        "logs": [f"{datetime.now().isoformat()} - Prepare: selected {counts}"],
        "metrics": {"prepare": {"elapsed_s": round(elapsed, 2), "selected": counts}},
    }


def make_suite_node(suite: Suite) -> Callable[[WorkflowState], Dict[str, Any]]:
    """Build the node running one suite; it only touches reducer keys."""

    def suite_node(state: WorkflowState) -> Dict[str, Any]:
        if state.get("errors"):
            return {}
        config = SuiteConfig.model_validate(state["config"])
        checks = select_checks(config)[suite]
        if not checks:
            return {}

        start_time = time.time()
        logger.info(f"🔄 Suite {suite.value}: Starting {len(checks)} checks")
        records = run_checks(checks, RunContext.from_config(config), jobs=config.jobs)
        elapsed = time.time() - start_time

        failed = [r.id for r in records if r.status == CheckStatus.FAIL]
        skipped = [r.id for r in records if r.status == CheckStatus.SKIP]
        if failed:
            logger.error(f"❌ Suite {suite.value}: {len(failed)} failed ({elapsed:.2f}s)")
        else:
            logger.info(f"✅ Suite {suite.value}: Complete ({elapsed:.2f}s)")
        updates: Dict[str, Any] = {
            "records": [r.model_dump(mode="json") for r in records],
            "logs": [
                f"{datetime.now().isoformat()} - Suite {suite.value}: "
                f"{len(records) - len(failed) - len(skipped)} pass, {len(failed)} fail, {len(skipped)} skip"
            ],
            "metrics": {suite.value: {"elapsed_s": round(elapsed, 2), "checks": len(records)}},
        }
        if skipped:
            updates["warnings"] = [f"{suite.value}: skipped {', '.join(skipped)}"]
        return updates

    suite_node.__name__ = f"{suite.value}_node"
    return suite_node


def validate_node(state: WorkflowState) -> Dict[str, Any]:
    """
    Node: quality gate between the suites and the report.

    Every selected check must have produced exactly one record.
    """
    logger.info("🔄 Validation: Starting quality gate check")
    if state.get("errors"):
        logger.warning(f"❌ Validation Failed: {len(state['errors'])} earlier errors")
        return {
            "current_step": "validation_failed",
            "logs": [f"{datetime.now().isoformat()} - Validation: FAILED - earlier errors"],
        }

    config = SuiteConfig.model_validate(state["config"])
    expected = {c.id for checks in select_checks(config).values() for c in checks}
    ids = [r["id"] for r in state.get("records", [])]
    problems = []
    missing = sorted(expected - set(ids))
    if missing:
        problems.append(f"no record for {', '.join(missing)}")
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    if duplicates:
        problems.append(f"duplicate records for {', '.join(duplicates)}")

    if problems:
        logger.warning(f"❌ Validation Failed: {problems}")
        return {
            "current_step": "validation_failed",
            "errors": problems,
            "logs": [f"{datetime.now().isoformat()} - Validation: FAILED - {len(problems)} issues"],
        }
    logger.info(f"✅ Validation: {len(ids)} records passed the quality gate")
    return {
        "current_step": "validated",
        "logs": [f"{datetime.now().isoformat()} - Validation: PASSED"],
    }


def should_report(state: WorkflowState) -> str:
    """Route to 'report' unless validation failed or errors exist."""
    if state.get("current_step") == "validation_failed" or state.get("errors"):
        logger.info("Routing: Skipping report due to workflow errors")
        return "end"
    return "report"


def build_report(state: WorkflowState) -> RunReport:
    """RunReport from the records in state, ordered by id."""
    records = sorted((CheckRecord.model_validate(r) for r in state.get("records", [])), key=lambda r: r.id)
    return RunReport(
        data_hashes=state.get("data_hashes", {}),
        records=records,
        summary=RunSummary.from_records(records),
        errors=list(state.get("errors", [])),
    )


def report_node(state: WorkflowState) -> Dict[str, Any]:
    """Node: assemble the report and write it when an output path is configured."""
    logger.info("🔄 Report: Starting")
    report = build_report(state)
    config = SuiteConfig.model_validate(state["config"])
    updates: Dict[str, Any] = {
        "report": report.model_dump(mode="json"),
        "current_step": "completed",
        "logs": [f"{datetime.now().isoformat()} - Report: {report.summary.model_dump()}"],
    }
    if config.output_path:
        try:
            path = Path(config.output_path)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
            updates["logs"].append(f"{datetime.now().isoformat()} - Report: wrote {path}")
        except OSError as e:
            logger.warning(f"⚠️ Report: cannot write {config.output_path}: {e}")
            updates["warnings"] = [f"report not written: {e}"]
    logger.info(f"✅ Report: {report.summary.passed} pass, {report.summary.failed} fail, {report.summary.skipped} skip")
    return updates


# ===== Workflow Builder =====

def create_workflow():
    """
    Create the LangGraph StateGraph workflow.

    Workflow pattern:
    START -> prepare -> [groups, chars, invariants, rr, audits] -> validate -> report/END

    Returns:
        Compiled StateGraph workflow
    """
    logger.info("Creating LangGraph verification workflow")
    workflow = StateGraph(WorkflowState)

    workflow.add_node("prepare", prepare_node)
    for suite in SUITE_NODES:
        workflow.add_node(suite.value, make_suite_node(suite))
    workflow.add_node("validate", validate_node)
    workflow.add_node("report", report_node)

    workflow.set_entry_point("prepare")
    # Fan-out to the suites, fan-in at the quality gate
    for suite in SUITE_NODES:
        workflow.add_edge("prepare", suite.value)
        workflow.add_edge(suite.value, "validate")

    workflow.add_conditional_edges("validate", should_report, {"report": "report", "end": END})
    workflow.add_edge("report", END)
    return workflow.compile()


NODE_PROGRESS = {
    "prepare": ("Prepare", 0.05),
    "groups": ("Groups suite", 0.25),
    "chars": ("Character suite", 0.45),
    "invariants": ("Invariants suite", 0.60),
    "rr": ("Riemann-Roch suite", 0.70),
    "audits": ("Case audits", 0.90),
    "validate": ("Validation", 0.95),
    "report": ("Report", 0.99),
}


def run_workflow(
    config: SuiteConfig,
    progress_callback: Optional[Callable[..., None]] = None,
) -> RunReport:
    """
    Run the verification workflow.

    Args:
        config: Validated run configuration
        progress_callback: Optional callback(step_name, progress[, metrics])

    Returns:
        RunReport; its errors list is non-empty when the run could not start
    """
    logger.info("Starting verification workflow using LangGraph")
    state = create_initial_state(config)
    try:
        compiled = create_workflow()
        final_state: Optional[Dict[str, Any]] = None
        for mode, chunk in compiled.stream(state, stream_mode=["updates", "values"]):
            if mode == "values":
                final_state = chunk
                continue
            for node_name, node_result in chunk.items():
                if node_name not in NODE_PROGRESS:
                    continue
                step_name, pct = NODE_PROGRESS[node_name]
                node_metrics = (node_result or {}).get("metrics", {})
                if progress_callback:
                    try:
                        progress_callback(f"{step_name} complete", pct, node_metrics)
                    except TypeError:
                        progress_callback(f"{step_name} complete", pct)
                logger.info(f"Progress: {step_name} ({int(pct * 100)}%)")
        if final_state is not None:
            state = final_state
    except Exception as e:
        logger.error(f"Workflow failed: {e}")
        state["errors"] = list(state.get("errors", [])) + [f"Workflow error: {e}"]

    if state.get("report"):
        report = RunReport.model_validate(state["report"])
    else:
        report = build_report(state)
    if report.errors:
        logger.warning(f"Workflow completed with {len(report.errors)} errors")
    if progress_callback:
        try:
            progress_callback("Completed", 1.0, {})
        except TypeError:
            progress_callback("Completed", 1.0)
    return report


def get_workflow_graph():
    """Compiled StateGraph, for visualization."""
    return create_workflow()
