"""
Tests for exact arithmetic: cyclotomic numbers, finite fields,
polynomials and F_p linear algebra.
"""

import pytest
import sys
import os
from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import ArithmeticDomainError, ParseError
from exact import (
    CycloNum,
    GF,
    MPoly,
    cyclo_canonical,
    field_degree,
    galois_conjugate,
    matpoly_det,
    monomials_of_degree,
    nullspace_mod,
    parse_ff,
    parse_poly,
    rank_mod,
    rref_mod,
    matmul_mod,
)


small_ints = st.integers(min_value=-5, max_value=5)
q7 = st.lists(small_ints, min_size=6, max_size=6).map(lambda c: CycloNum(7, c))
q3 = st.lists(small_ints, min_size=2, max_size=2).map(lambda c: CycloNum(3, c))

linear_polys = st.dictionaries(
    st.tuples(*[st.integers(min_value=0, max_value=1)] * 3), small_ints, max_size=3
).map(lambda t: MPoly(("x1", "x2", "x3"), t))
poly_rows = st.lists(linear_polys, min_size=3, max_size=3)
poly_matrices = st.lists(poly_rows, min_size=3, max_size=3)


def as_sympy(f, symbols):
    return sum((c * sympy.Mul(*[s ** e for s, e in zip(symbols, m)]) for m, c in f.items()), sympy.Integer(0))


class TestCycloParsing:
    """Tests for the E(n)^k grammar."""

    def test_roots_of_unity_sum_to_zero(self):
        """1 + zeta + ... + zeta^6 is zero."""
        x = cyclo_canonical("1+E(7)+E(7)^2+E(7)^3+E(7)^4+E(7)^5+E(7)^6")
        assert x == 0
        assert x.is_zero()

    def test_gauss_period_quadratic(self):
        """eta = zeta + zeta^2 + zeta^4 satisfies eta^2 + eta + 2 = 0."""
        eta = cyclo_canonical("E(7)+E(7)^2+E(7)^4")
        assert eta * eta + eta + 2 == 0
        assert not eta.is_rational()

    def test_negative_exponent_and_coefficients(self):
        """E(4)^-1 is -E(4) and 1/2*E(3) parses."""
        assert cyclo_canonical("E(4)^-1") == -cyclo_canonical("E(4)")
        half = cyclo_canonical("1/2*E(3)")
        assert half * 2 == cyclo_canonical("E(3)")

    def test_declared_conductor_must_be_multiple(self):
        """A declared conductor not divisible by the root orders is rejected."""
        assert cyclo_canonical("E(3)", conductor=21) == cyclo_canonical("E(3)")
        with pytest.raises(ParseError):
            cyclo_canonical("E(7)", conductor=3)

    @pytest.mark.parametrize("text", ["", "E(0)", "E(7", "3*", "2 x", "1/0", "E(5)^"])
    def test_malformed_expressions(self, text):
        """Malformed input raises ParseError."""
        with pytest.raises(ParseError):
            cyclo_canonical(text)


class TestCycloArithmetic:
    """Tests for field operations in Q(zeta_n)."""

    @settings(max_examples=40, deadline=None)
    @given(q7, q7, q7)
    def test_ring_axioms(self, a, b, c):
        """Addition and multiplication are commutative, associative and distributive."""
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @settings(max_examples=30, deadline=None)
    @given(q7)
    def test_inverse(self, a):
        """Nonzero elements are invertible."""
        if a.is_zero():
            with pytest.raises(ArithmeticDomainError):
                a.inverse()
        else:
            assert a * a.inverse() == 1

    @settings(max_examples=30, deadline=None)
    @given(q3, q7)
    def test_conductor_embedding(self, a, b):
        """Mixed conductors meet in Q(zeta_21) without changing values."""
        assert a.embed(21) == a
        assert (a + b) - b == a

    def test_galois_action(self):
        """zeta -> zeta^k is a ring map; non-coprime k is rejected."""
        z = CycloNum.zeta(7)
        assert z.galois(3) == CycloNum.zeta(7, 3)
        assert (z * z).galois(2) == z.galois(2) * z.galois(2)
        assert z.conjugate() == CycloNum.zeta(7, 6)
        assert galois_conjugate(Fraction(1, 3), 2) == Fraction(1, 3)
        with pytest.raises(ArithmeticDomainError):
            z.galois(7)

    def test_division_by_zero(self):
        """Division by zero raises ArithmeticDomainError."""
        with pytest.raises(ArithmeticDomainError):
            CycloNum.zeta(7) / 0
        with pytest.raises(ArithmeticDomainError):
            CycloNum.rational(0, 7).inverse()

    def test_field_degree(self):
        """Gauss period of Q(zeta_7) generates the quadratic subfield."""
        eta = cyclo_canonical("E(7)+E(7)^2+E(7)^4")
        assert field_degree([eta]) == 2
        assert field_degree([CycloNum.zeta(7)]) == 6
        assert field_degree([1, Fraction(1, 2)]) == 1

    def test_rational_conversion(self):
        """Rational elements convert to Fraction and int."""
        x = cyclo_canonical("E(7)+E(7)^6") + cyclo_canonical("E(7)^2+E(7)^5") + cyclo_canonical("E(7)^3+E(7)^4")
        assert x.to_int() == -1
        with pytest.raises(ArithmeticDomainError):
            CycloNum.zeta(7).to_fraction()


class TestFiniteField:
    """Tests for GF(p^k)."""

    def test_prime_field(self):
        """F_11 arithmetic with Python ints."""
        F = GF(11)
        a = F(3)
        assert a * 4 == 1
        assert a.inverse() == 4
        assert (a ** 10) == 1

    @pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2)])
    def test_multiplicative_group_cyclic(self, p, k):
        """The primitive element has order p^k - 1."""
        F = GF(p, k)
        g = F(F.primitive_element())
        powers = {(g ** e).value for e in range(F.q - 1)}
        assert len(powers) == F.q - 1
        assert g ** (F.q - 1) == 1

    def test_field_axioms_exhaustive(self):
        """Every nonzero element of F_8 has an inverse and distributivity holds."""
        F = GF(2, 3)
        elems = F.elements()
        for a in elems:
            if a:
                assert a * a.inverse() == 1
            for b in elems[:4]:
                for c in elems[:4]:
                    assert a * (b + c) == a * b + a * c

    def test_parse_entries(self):
        """p:k:poly entries parse and u^k reduces through the modulus."""
        x = parse_ff("2:3:u^3")
        assert x == parse_ff("2:3:u+1")
        assert parse_ff("5:1:7") == 2

    @pytest.mark.parametrize("text", ["2:3", "a:3:u", "2:3:v", "7:1:"])
    def test_parse_errors(self, text):
        """Malformed entries raise ParseError."""
        with pytest.raises(ParseError):
            parse_ff(text)

    def test_non_prime_rejected(self):
        """The characteristic must be prime."""
        with pytest.raises(ArithmeticDomainError):
            GF(6)

    def test_mixed_fields(self):
        """Elements of different fields do not mix."""
        with pytest.raises(ArithmeticDomainError):
            GF(2, 3)(1) + GF(3, 2)(1)


class TestMPoly:
    """Tests for sparse multivariate polynomials."""

    VARS = ("x1", "x2", "x3")

    def test_parse_and_text(self):
        """Parsing then printing keeps the polynomial."""
        f = parse_poly("x1*x2^3 + x2*x3^3 + x3*x1^3", self.VARS)
        assert f.degree() == 4
        assert f.is_homogeneous()
        assert parse_poly(f.to_text(), self.VARS) == f

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
    def test_evaluation_homomorphism(self, point, shift):
        """Evaluation respects sums and products."""
        f = parse_poly("x1^2 - 3*x2*x3 + 1/2", self.VARS)
        g = parse_poly("x1 + x2^3 - x3", self.VARS)
        assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)
        assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)

    def test_derivatives(self):
        """Partial derivatives and Euler's identity."""
        f = parse_poly("x1*x2^3 + x2*x3^3 + x3*x1^3", self.VARS)
        x = MPoly.gens(self.VARS)
        euler = sum((xi * fi for xi, fi in zip(x, f.gradient())), MPoly(self.VARS))
        assert euler == f * 4
        assert f.diff(1) == parse_poly("3*x1*x2^2 + x3^3", self.VARS)

    def test_primitive_and_content(self):
        """Content is the rational gcd; the primitive part is integral."""
        f = parse_poly("4/3*x1^2 - 2*x2^2", self.VARS)
        s, P = f.primitive()
        assert f.content() == Fraction(2, 3)
        assert s == Fraction(2, 3)
        assert P == parse_poly("2*x1^2 - 3*x2^2", self.VARS)
        assert P.is_integral()

    def test_substitute_linear(self):
        """f(Mx) for a permutation matrix permutes the variables."""
        f = parse_poly("x1*x2^3", self.VARS)
        M = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
        assert f.substitute_linear(M) == parse_poly("x2*x3^3", self.VARS)

    def test_determinant(self):
        """2x2 polynomial determinant."""
        x1, x2, x3 = MPoly.gens(self.VARS)
        assert matpoly_det([[x1, x2], [x3, x1]]) == x1 * x1 - x2 * x3

    @settings(max_examples=40, deadline=None)
    @given(poly_matrices)
    def test_determinant_matches_sympy(self, M):
        symbols = sympy.symbols("x1 x2 x3")
        expected = sympy.Matrix([[as_sympy(e, symbols) for e in row] for row in M]).det()
        assert sympy.expand(expected - as_sympy(matpoly_det(M), symbols)) == 0

    @settings(max_examples=40, deadline=None)
    @given(poly_matrices, poly_rows, small_ints)
    def test_determinant_multilinear(self, M, v, c):
        """det is linear in the first row."""
        combined = [[a + c * b for a, b in zip(M[0], v)]] + M[1:]
        replaced = [v] + M[1:]
        assert matpoly_det(combined) == matpoly_det(M) + c * matpoly_det(replaced)

    @settings(max_examples=40, deadline=None)
    @given(poly_matrices)
    def test_determinant_row_swap(self, M):
        swapped = [M[1], M[0], M[2]]
        assert matpoly_det(swapped) == -matpoly_det(M)

    def test_monomial_count(self):
        """There are C(d+2, 2) monomials of degree d in 3 variables."""
        assert len(monomials_of_degree(3, 6)) == 28
        assert len(monomials_of_degree(4, 4)) == 35

    def test_bad_factor(self):
        """Unknown variables are parse errors."""
        with pytest.raises(ParseError):
            parse_poly("x1*y", self.VARS)


class TestModularLinalg:
    """Tests for row reduction over F_p."""

    def test_rank_and_nullspace(self):
        """A rank-2 matrix over F_7 has a 1-dimensional nullspace."""
        A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 5]], dtype=np.int64)
        assert rank_mod(A, 7) == 2
        N = nullspace_mod(A, 7)
        assert N.shape == (3, 1)
        assert not matmul_mod(A, N, 7).any()

    def test_rref_pivots(self):
        """Pivot columns of the identity are all columns."""
        R, pivots = rref_mod(np.eye(4, dtype=np.int64) * 3, 5)
        assert pivots == [0, 1, 2, 3]
        assert (R == np.eye(4, dtype=np.int64)).all()

    def test_large_products(self):
        """Products near the modulus do not overflow."""
        p = 2_147_483_629
        A = np.full((3, 3), p - 1, dtype=np.int64)
        assert (matmul_mod(A, A, p) == 3).all()
