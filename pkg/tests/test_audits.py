"""
Tests for the case registry, the pinned-outcome manifest and the
Diophantine systems behind the link cases.
"""

import pytest
import sys
import os
from fractions import Fraction
from types import SimpleNamespace

from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from audits import (
    REGISTRY,
    AuditCase,
    audit_ids,
    get_case,
    load_coverage,
    load_manifest,
    parse_coverage,
    parse_manifest,
    register,
    run_audit,
    verify_expected,
)
from audits.systems import (
    check_link_solution,
    conic_intersection,
    forced_divisor,
    rational_sqrt,
    solve_quadratic_system,
    solve_reduction_system,
)
from audits import cases_a7_burkhardt
from errors import ArithmeticDomainError, CapExceeded, DataError, ParseError, UnknownCaseError
from models import CheckStatus, StepKind
from orchestrator import check_coverage

QUICK_CASES = [
    "klein.actions",
    "klein.char-degrees",
    "klein.curve-orbits",
    "klein.subgroups",
    "link.quadratic",
    "link.reduction",
    "nongor.dim-5",
    "nongor.kb-bound",
    "nongor.sing-bound",
    "nongor.tab",
    "nongor.tab0",
]


class TestManifest:
    """Tests for the registry manifest and its hashes."""

    def test_every_case_has_a_row(self):
        """Registered ids and manifest rows are the same set."""
        assert set(audit_ids()) == set(load_manifest())

    def test_quotes_match(self):
        """Each case carries the quote recorded in its manifest row."""
        manifest = load_manifest()
        for case_id in audit_ids():
            assert REGISTRY[case_id].quote == manifest[case_id].quote

    @pytest.mark.parametrize("case_id", sorted(REGISTRY))
    def test_expected_hashes(self, case_id):
        """Every pinned outcome hashes to its manifest row."""
        assert verify_expected(get_case(case_id)) == load_manifest()[case_id].expected_hash

    def test_tampered_expected(self):
        """Changing a pinned value without the manifest is a data error."""
        case = SimpleNamespace(
            case_id="nongor.kb-bound",
            expected={"admitted_lengths": [2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15], "bound_length": 17},
        )
        with pytest.raises(DataError) as exc:
            verify_expected(case)
        assert exc.value.exit_code == 2

    def test_missing_row(self):
        case = SimpleNamespace(case_id="nongor.kb-bound", expected=None)
        with pytest.raises(DataError):
            verify_expected(case, manifest={})

    def test_quote_may_contain_bars(self):
        rows = parse_manifest("x.y | ref | |a| < b | 0123456789abcdef\n")
        assert rows["x.y"].quote == "|a| < b"
        assert rows["x.y"].expected_hash == "0123456789abcdef"

    @pytest.mark.parametrize("text", [
        "x.y | ref | 0123456789abcdef\n",
        "x.y | ref | quote | 0123\n",
        "x.y | ref | quote | 0123456789ABCDEF\n",
        "x.y | ref | q | 0123456789abcdef\nx.y | ref | q | 0123456789abcdef\n",
    ])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_manifest(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError):
            load_manifest(tmp_path / "none.txt")


class TestCoverage:
    """Tests for the coverage manifest of in-scope statements."""

    def test_every_topic_is_covered(self):
        """Each topic names at least one id, and every id is a known check or audit."""
        coverage = check_coverage()
        assert len(coverage) == 18
        assert all(coverage.values())

    def test_every_audit_has_a_topic(self):
        named = {i for ids in load_coverage().values() for i in ids}
        assert set(audit_ids()) <= named

    def test_unknown_id(self):
        with pytest.raises(DataError) as exc:
            check_coverage({"Klein group, transitive action sizes": ["klein.actions", "klein.no-such"]})
        assert exc.value.detail == {"Klein group, transitive action sizes": ["klein.no-such"]}
        assert exc.value.exit_code == 2

    @pytest.mark.parametrize("text", [
        "a topic without ids\n",
        "topic | \n",
        " | klein.actions\n",
        "t | klein.actions\nt | klein.subgroups\n",
    ])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_coverage(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError):
            load_coverage(tmp_path / "none.txt")


class TestRegistry:
    """Tests for case registration and lookup."""

    def test_unknown_case(self):
        with pytest.raises(UnknownCaseError) as exc:
            get_case("no.such-case")
        assert isinstance(exc.value, KeyError)
        assert "no.such-case" in str(exc.value)

    def test_duplicate_registration(self):
        class Duplicate(AuditCase):
            case_id = "nongor.tab"

            def evaluate(self):
                return None

        with pytest.raises(ValueError):
            register(Duplicate)

    def test_missing_id(self):
        class Anonymous(AuditCase):
            def evaluate(self):
                return None

        with pytest.raises(ValueError):
            register(Anonymous)

    def test_case_count(self):
        assert len(audit_ids()) == 42


class TestRunAudit:
    """Tests for running registered cases."""

    @pytest.mark.parametrize("case_id", QUICK_CASES)
    def test_quick_cases_pass(self, case_id):
        report = run_audit(case_id)
        assert report.status == CheckStatus.PASS
        assert report.computed == report.expected

    def test_transcript_kinds(self):
        """Cited facts stay visible as data assertions and out-of-scope steps."""
        link = run_audit("link.quadratic")
        assert any(s.kind == StepKind.DATA_ASSERTION for s in link.steps)
        dim5 = run_audit("nongor.dim-5")
        assert any(s.kind == StepKind.OUT_OF_SCOPE for s in dim5.steps)

    def test_rerun_resets_steps(self):
        case = get_case("nongor.tab0")
        first = case.run()
        second = case.run()
        assert len(first.steps) == len(second.steps)

    def test_failing_case(self):
        """A computed value that differs from the pinned one fails."""

        class Wrong(AuditCase):
            case_id = "test.wrong"
            expected = [1, 2]

            def evaluate(self):
                return (1, Fraction(5, 2))

        report = Wrong().run()
        assert report.status == CheckStatus.FAIL
        assert report.computed == [1, "5/2"]

    def test_orbit_gap_finds_realized_index(self, monkeypatch):
        """Without an obstruction, a subgroup of index 56 in the lattice fails the case."""
        monkeypatch.setattr(cases_a7_burkhardt, "subgroup_order_obstruction", lambda G, m, classes=None: None)
        monkeypatch.setattr(cases_a7_burkhardt, "lattice", lambda name: [SimpleNamespace(index=56, name="H45")])
        report = run_audit("a7.orbit-gap")
        assert report.status == CheckStatus.FAIL
        assert report.computed == [56]

    def test_orbit_gap_undecided_is_not_a_pass(self, monkeypatch):
        """Without an obstruction the lattice of A7 is needed, which is above the search cap."""
        monkeypatch.setattr(cases_a7_burkhardt, "subgroup_order_obstruction", lambda G, m, classes=None: None)
        with pytest.raises(CapExceeded):
            run_audit("a7.orbit-gap")

    def test_orbit_gap_obstructions(self):
        report = run_audit("a7.orbit-gap")
        assert report.status == CheckStatus.PASS
        assert [s.value for s in report.steps] == [56, 36, 20]
        assert all(s.kind == StepKind.COMPUTED for s in report.steps)

    @pytest.mark.slow
    @pytest.mark.parametrize("case_id", sorted(set(REGISTRY) - set(QUICK_CASES)))
    def test_remaining_cases_pass(self, case_id):
        assert run_audit(case_id).status == CheckStatus.PASS


class TestSystems:
    """Tests for the exact solvers."""

    @settings(max_examples=200, deadline=None)
    @given(
        st.fractions(min_value=Fraction(1, 2), max_value=64, max_denominator=4),
        st.integers(min_value=1, max_value=30),
        st.integers(min_value=1, max_value=30),
    )
    def test_solutions_back_substitute(self, K, N, n_prime):
        """Every returned (a, b) satisfies both equations and a > 0."""
        for a, b in solve_quadratic_system(K, N, n_prime):
            assert a > 0
            assert check_link_solution(K, N, n_prime, a, b)

    def test_equal_counts(self):
        """N' = N gives b = 1 and a = N/(g - 1)."""
        assert solve_quadratic_system(10, 7, 7) == [(Fraction(7, 5), Fraction(1))]

    @pytest.mark.parametrize("q,root", [(Fraction(9, 4), Fraction(3, 2)), (Fraction(2), None), (Fraction(-1), None), (Fraction(0), Fraction(0))])
    def test_rational_sqrt(self, q, root):
        assert rational_sqrt(q) == root

    def test_reduction(self):
        """g = 6: the only solution has a = 28/27, forcing 27 | 2K."""
        result = solve_reduction_system(6)
        assert result.solutions == [(Fraction(28, 27), Fraction(1), 7)]
        assert result.divisor == 27
        assert result.contradiction

    def test_reduction_genus_twelve(self):
        result = solve_reduction_system(12)
        assert (Fraction(28, 51), Fraction(1), 7) in result.solutions
        assert result.divisor == 51

    def test_conic_intersection(self):
        x = conic_intersection(10, 7)
        assert -2 * 7 + 7 * 6 * x == 18
        with pytest.raises(ArithmeticDomainError):
            conic_intersection(10, 1)

    def test_forced_divisor(self):
        assert forced_divisor(10, [7, 14]) == 5
        assert forced_divisor(22, [7, 14]) == 11
