"""
Tests for invariant theory: the Klein representation, Reynolds
averaging over F_p, the classical covariants and Macaulay certificates.
"""

import pytest
import sys
import os

from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from characters import dixon_table, molien_dim
from errors import ArithmeticDomainError, CapExceeded
from exact import MPoly, parse_poly
from groups.elements import rows_of
from invariants import (
    act_on_poly,
    bordered_hessian,
    hessian,
    jacobian_det,
    klein_covariants,
    klein_quartic,
    klein_rep,
    reduction_prime,
    reynolds,
    smoothness_certificate,
    u4_rep,
)
from models import CertificateVerdict

VARS = ("x1", "x2", "x3")


@pytest.fixture(scope="module")
def covariants():
    return klein_covariants()


class TestRepresentations:
    """Tests for the explicit matrix representations."""

    def test_klein_closure(self):
        """The three generators close to a group of order 168."""
        assert klein_rep().group().order == 168

    def test_klein_trace_character(self):
        """Traces of the closure match exactly one 3-dimensional irreducible."""
        R = klein_rep()
        T = dixon_table(R.group())
        rows = R.matching_rows(T)
        assert len(rows) == 1
        assert T.degrees[rows[0]] == 3

    def test_quartic_fixed_by_generators(self):
        """The diagonal and cyclic generators fix x1*x2^3 + x2*x3^3 + x3*x1^3."""
        f = klein_quartic()
        diag, cycle, _ = klein_rep().generators
        assert act_on_poly(diag, f) == f
        assert act_on_poly(cycle, f) == f

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(min_value=0, max_value=167),
        st.integers(min_value=0, max_value=167),
        st.dictionaries(st.tuples(*[st.integers(min_value=0, max_value=2)] * 3), st.integers(min_value=-3, max_value=3), max_size=4),
    )
    def test_right_action(self, a, b, terms):
        """Acting by B then by A is acting by the product BA."""
        R = klein_rep()
        G = R.group()
        f = MPoly(VARS, terms)
        BA = rows_of(R.ops.mul(G.element(b), G.element(a)), R.degree)
        assert act_on_poly(R.matrix(a), act_on_poly(R.matrix(b), f)) == act_on_poly(BA, f)

    def test_action_size_mismatch(self):
        with pytest.raises(ArithmeticDomainError):
            act_on_poly([[1, 0], [0, 1]], klein_quartic())

    @pytest.mark.parametrize("conductor,above,p", [(7, 168, 197), (7, 336, 337), (3, 10, 13)])
    def test_reduction_prime(self, conductor, above, p):
        assert reduction_prime(conductor, above) == p


class TestReynolds:
    """Tests for invariant spaces of the Klein group."""

    @pytest.mark.parametrize("d,dim", [(0, 1), (1, 0), (3, 0), (4, 1), (6, 1), (8, 1), (14, 2)])
    def test_dimensions(self, d, dim):
        """Dimensions agree with the Molien series."""
        assert reynolds(klein_rep(), d).dim == dim

    def test_prime(self):
        assert reynolds(klein_rep(), 4).p == 197

    def test_monomial_cap(self):
        """Too many monomials is a cap, not a failure."""
        with pytest.raises(CapExceeded):
            reynolds(klein_rep(), 14, max_monomials=100)

    def test_quartic_spans_degree_four(self):
        space = reynolds(klein_rep(), 4)
        assert space.contains(klein_quartic())
        assert not space.contains(parse_poly("x1^4", VARS))

    def test_degree_fourteen(self, covariants):
        """phi14 and phi4^2*phi6 are independent and span the degree-14 invariants."""
        space = reynolds(klein_rep(), 14)
        assert space.contains(covariants.phi14)
        assert space.rank_of([covariants.phi14, covariants.phi4 ** 2 * covariants.phi6]) == 2

    @pytest.mark.slow
    def test_degree_twenty_one(self, covariants):
        """The first odd invariant is the Jacobian phi21."""
        space = reynolds(klein_rep(), 21)
        assert space.dim == 1
        assert space.contains(covariants.phi21)

    @pytest.mark.slow
    def test_u4_quartic(self):
        """SL(2,7) on C^4 has a single invariant quartic and it is smooth."""
        space = reynolds(u4_rep(), 4)
        assert space.dim == 1
        assert space.p == 337
        cert = smoothness_certificate(space.polys()[0], space.p)
        assert cert.certified


def trace_character(R):
    T = dixon_table(R.group())
    rows = R.matching_rows(T)
    assert len(rows) == 1
    return T.character(rows[0])


class TestMolienAgainstReynolds:
    """Character-theoretic and linear-algebra invariant dimensions agree."""

    @pytest.fixture(scope="class")
    def klein_character(self):
        return trace_character(klein_rep())

    @pytest.fixture(scope="class")
    def u4_character(self):
        return trace_character(u4_rep())

    @pytest.mark.parametrize("d", range(9))
    def test_klein(self, klein_character, d):
        assert molien_dim(klein_character, d) == reynolds(klein_rep(), d).dim

    @pytest.mark.slow
    @pytest.mark.parametrize("d", range(9))
    def test_u4(self, u4_character, d):
        assert molien_dim(u4_character, d) == reynolds(u4_rep(), d).dim


class TestCovariants:
    """Tests for the Hessian, bordered Hessian and Jacobian."""

    def test_degrees(self, covariants):
        assert [f.degree() for f in (covariants.phi4, covariants.phi6, covariants.phi14, covariants.phi21)] == [
            4, 6, 14, 21
        ]

    def test_primitive_forms(self, covariants):
        """Every covariant is stored as a primitive integer polynomial."""
        for f in covariants.as_dict().values():
            assert f.is_integral()
            assert f.content() == 1

    def test_functions_agree(self, covariants):
        """The standalone helpers reproduce the cached covariants."""
        assert hessian(covariants.phi4) == covariants.phi6
        assert bordered_hessian(covariants.phi4, covariants.phi6) == covariants.phi14

    def test_hessian_invariant(self, covariants):
        assert reynolds(klein_rep(), 6).contains(covariants.phi6)

    def test_jacobian_needs_square_system(self, covariants):
        with pytest.raises(ArithmeticDomainError):
            jacobian_det(covariants.phi4, covariants.phi6)

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ArithmeticDomainError):
            hessian(parse_poly("x1^2 + x2", VARS))


class TestSmoothness:
    """Tests for Macaulay rank certificates."""

    def test_klein_quartic_smooth(self):
        """The Klein quartic is certified smooth at p = 11 in degree 7."""
        cert = smoothness_certificate(klein_quartic(), 11)
        assert cert.verdict == CertificateVerdict.CERTIFIED
        assert cert.D == 7
        assert cert.rank == cert.cols == 36
        record = cert.to_record("phi4")
        assert record.label == "phi4"
        assert record.verdict == CertificateVerdict.CERTIFIED

    def test_cone_fails(self):
        """x1^4 + x2^4 is singular at [0:0:1]; at the Macaulay bound the verdict is failed."""
        cert = smoothness_certificate(parse_poly("x1^4 + x2^4", VARS), 11)
        assert cert.verdict == CertificateVerdict.FAILED
        assert "x3^7" in cert.cokernel

    def test_low_degree_inconclusive(self):
        """Below the Macaulay bound a rank deficit proves nothing."""
        cert = smoothness_certificate(klein_quartic(), 11, D=5)
        assert cert.verdict == CertificateVerdict.INCONCLUSIVE

    @pytest.mark.parametrize("text,p", [("x1^4 + x2", 11), ("1/2*x1^4", 11), ("x1^4 + x2^4", 9), ("11*x1^4", 11)])
    def test_bad_inputs(self, text, p):
        with pytest.raises(ArithmeticDomainError):
            smoothness_certificate(parse_poly(text, VARS), p)
