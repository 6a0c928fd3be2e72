"""
Tests for the verify command line.
"""

import json
import pytest
import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from audits.common import configure as configure_audits
from cli import main


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """The default table cache lives under the working directory."""
    monkeypatch.chdir(tmp_path)
    yield
    configure_audits()


class TestList:
    """Tests for `verify list`."""

    def test_text(self, capsys):
        assert main(["list"]) == 0
        out = capsys.readouterr().out
        assert "rr.gorenstein" in out
        assert "link.quadratic" in out

    def test_json(self, capsys):
        assert main(["list", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        audit = next(r for r in rows if r["id"] == "nongor.kb-bound")
        assert audit["suite"] == "audits"
        assert len(audit["expected_hash"]) == 16


class TestTableAndMolien:
    """Tests for the table and molien subcommands."""

    def test_table(self, capsys):
        assert main(["table", "PSL(2,7)"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("PSL(2,7)")

    def test_unknown_group(self, capsys):
        assert main(["table", "M11"]) == 2
        assert "error" in capsys.readouterr().err

    def test_molien(self, capsys):
        """Invariants of the Klein 3-dimensional representation up to degree 6."""
        assert main(["molien", "PSL(2,7)", "1", "6"]) == 0
        assert capsys.readouterr().out.strip() == "1 0 0 0 1 0 1"

    @pytest.mark.parametrize("argv", [["molien", "PSL(2,7)", "6", "4"], ["molien", "PSL(2,7)", "1", "-1"]])
    def test_bad_molien_args(self, argv, capsys):
        assert main(argv) == 2


class TestRun:
    """Tests for `verify run`."""

    def test_json_report(self, capsys):
        assert main(["-q", "run", "--suite", "rr", "--format", "json", "--cache-dir", ""]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["summary"]["passed"] == 4
        assert report["errors"] == []

    def test_text_report(self, capsys):
        assert main(["-q", "run", "--case", "link.quadratic", "--cache-dir", ""]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("PASS  link.quadratic")
        assert "data assertion:" in out

    def test_unknown_case(self, capsys):
        assert main(["-q", "run", "--case", "no.such-check"]) == 2
        assert "error:" in capsys.readouterr().out

    def test_invalid_option(self, capsys):
        """Options that fail validation are configuration errors."""
        assert main(["-q", "run", "--jobs", "0"]) == 2

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "out" / "report.json"
        assert main(["-q", "run", "--suite", "rr", "--output", str(path), "--cache-dir", ""]) == 0
        assert json.loads(path.read_text())["summary"]["total"] == 4
