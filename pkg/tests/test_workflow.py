"""
Integration tests for the LangGraph verification workflow.
"""

import json
from pathlib import Path
import pytest
import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from audits.common import configure as configure_audits
from errors import CapExceeded
from models import CheckStatus, RunReport, Suite, SuiteConfig
from orchestrator import Check, RunContext, create_initial_state, create_workflow, run_check, run_workflow, select_checks
from orchestrator.workflow import hash_data_files, should_report, validate_node


@pytest.fixture
def reset_audit_limits():
    """Runs leave their max order in the audit helpers; restore the defaults."""
    yield
    configure_audits()


class TestWorkflowState:
    """Tests for the state schema and the graph."""

    def test_initial_state(self, rr_config):
        state = create_initial_state(rr_config)
        assert state["current_step"] == "initialized"
        assert state["config"]["suite"] == "rr"
        assert state["records"] == []
        assert state["errors"] == []

    def test_create_workflow_returns_compiled_graph(self):
        compiled = create_workflow()
        assert hasattr(compiled, "invoke")
        assert hasattr(compiled, "stream")

    def test_data_hashes(self):
        hashes = hash_data_files()
        assert "registry.txt" in hashes
        assert "fano3.txt" in hashes
        assert "tables/L2_7.ctab" in hashes
        assert all(len(h) == 16 for h in hashes.values())


class TestQualityGate:
    """Tests for the validate node and routing."""

    def test_missing_records(self, rr_config):
        """Every selected check needs a record."""
        result = validate_node(create_initial_state(rr_config))
        assert result["current_step"] == "validation_failed"
        assert "rr.gorenstein" in result["errors"][0]

    def test_duplicate_records(self, rr_config):
        state = create_initial_state(rr_config)
        ids = [c.id for c in select_checks(rr_config)[Suite.RR]]
        state["records"] = [{"id": i} for i in ids] + [{"id": ids[0]}]
        result = validate_node(state)
        assert any("duplicate" in e for e in result["errors"])

    def test_routing(self):
        assert should_report({"current_step": "validated", "errors": []}) == "report"
        assert should_report({"current_step": "validation_failed", "errors": []}) == "end"
        assert should_report({"current_step": "validated", "errors": ["x"]}) == "end"


class TestRunCheck:
    """Tests for turning check results into records."""

    def test_pass_and_fail(self):
        ctx = RunContext()
        ok = run_check(Check("t.ok", Suite.RR, "", lambda c: (1, 1)), ctx)
        bad = run_check(Check("t.bad", Suite.RR, "", lambda c: ([1, 2], [1, 3])), ctx)
        assert ok.status == CheckStatus.PASS
        assert bad.status == CheckStatus.FAIL
        assert bad.actual == [1, 3]

    def test_cap_is_skip(self):
        def capped(ctx):
            raise CapExceeded("too many monomials", undecided=["degree 21"])

        record = run_check(Check("t.cap", Suite.INVARIANTS, "", capped), RunContext())
        assert record.status == CheckStatus.SKIP
        assert record.undecided == ["degree 21"]

    def test_exception_is_fail(self):
        def broken(ctx):
            raise ZeroDivisionError("division by zero")

        record = run_check(Check("t.err", Suite.RR, "", broken), RunContext())
        assert record.status == CheckStatus.FAIL
        assert record.detail.startswith("ZeroDivisionError")


class TestRunWorkflow:
    """End-to-end runs through the graph."""

    def test_rr_suite(self, rr_config, reset_audit_limits):
        """The rr suite passes and the JSON report is written."""
        progress = []
        report = run_workflow(rr_config, progress_callback=lambda step, pct, metrics=None: progress.append(step))
        assert report.exit_code == 0
        assert report.errors == []
        assert report.summary.total == 4
        assert report.summary.passed == 4
        assert [r.id for r in report.records] == sorted(r.id for r in report.records)
        assert progress[-1] == "Completed"

        written = RunReport.model_validate(json.loads(Path(rr_config.output_path).read_text()))
        assert written.without_timing() == report.without_timing()

    def test_deterministic(self, rr_config, reset_audit_limits):
        """Two runs agree once timings are dropped."""
        first = run_workflow(rr_config).without_timing()
        second = run_workflow(rr_config).without_timing()
        assert first == second

    def test_unknown_id(self, reset_audit_limits):
        """An unknown id stops the run with exit status 2 and no records."""
        report = run_workflow(SuiteConfig(case_ids=["no.such-check"], cache_dir=None))
        assert report.exit_code == 2
        assert report.records == []
        assert "no.such-check" in report.errors[0]

    def test_max_order_skips(self, reset_audit_limits):
        """A group above max_order is a skip, and skips keep exit status 0."""
        config = SuiteConfig(case_ids=["groups.order.Sp(4,3)", "rr.kb-bound-length"], max_order=200, cache_dir=None)
        report = run_workflow(config)
        statuses = {r.id: r.status for r in report.records}
        assert statuses == {"groups.order.Sp(4,3)": CheckStatus.SKIP, "rr.kb-bound-length": CheckStatus.PASS}
        assert report.records[0].undecided == ["Sp(4,3)"]
        assert report.exit_code == 0

    def test_audit_through_workflow(self, reset_audit_limits):
        """A selected audit id runs in the audits suite with its transcript."""
        report = run_workflow(SuiteConfig(case_ids=["link.quadratic"], cache_dir=None))
        record = report.records[0]
        assert record.suite == Suite.AUDITS
        assert record.status == CheckStatus.PASS
        assert report.summary.data_assertions > 0
