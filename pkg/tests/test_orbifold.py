"""
Tests for orbifold Riemann-Roch, the orbit enumerations and the
smooth Fano table.
"""

import pytest
import sys
import os
from fractions import Fraction
from math import gcd

from hypothesis import given, settings, strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import ArithmeticDomainError, DataError, ParseError
from orbifold import (
    Basket,
    BasketPoint,
    FanoNumerics,
    admissible_gorenstein_genera,
    dim_anticanonical,
    dim_minus_2k,
    enumerate_empty_anticanonical,
    enumerate_sigma_configs,
    index2_dims,
    kb_bound_length,
    kc2_inequality,
    load_fano_table,
    local_contribution,
    max_sing_bound,
    parse_fano_table,
    rr_chi,
    sigma_table,
    sing_bound,
)


@st.composite
def basket_points(draw):
    r = draw(st.integers(min_value=2, max_value=15))
    b = draw(st.sampled_from([b for b in range(1, r) if gcd(b, r) == 1]))
    return BasketPoint(r, b)


@st.composite
def fano_numerics(draw):
    points = draw(st.lists(basket_points(), max_size=6))
    denominator = 2
    for P in points:
        denominator = denominator * P.r // gcd(denominator, P.r)
    numerator = draw(st.integers(min_value=1, max_value=400))
    return FanoNumerics(Fraction(numerator, denominator), Basket(tuple(points)))


class TestBasket:
    """Tests for basket points and Fano numerics."""

    def test_point_normalization(self):
        """1/5(1,3,2) and 1/5(1,2,3) are the same point."""
        assert BasketPoint(5, 3) == BasketPoint(5, 2)
        assert str(BasketPoint(5, 3)) == "1/5(1,2,3)"

    @pytest.mark.parametrize("r,b", [(1, 0), (4, 2), (3, 3), (6, 0)])
    def test_non_terminal(self, r, b):
        with pytest.raises(ArithmeticDomainError):
            BasketPoint(r, b)

    def test_index_two_integrality(self):
        """With only index-2 points, 2(-K)^3 must be an integer."""
        with pytest.raises(ArithmeticDomainError):
            FanoNumerics(Fraction(1, 3), Basket.index2(2))
        with pytest.raises(ArithmeticDomainError):
            FanoNumerics(Fraction(1, 3))
        assert FanoNumerics(Fraction(1, 3), Basket.from_pairs([(3, 1)])).K3 == Fraction(1, 3)

    def test_non_positive_degree(self):
        with pytest.raises(ArithmeticDomainError):
            FanoNumerics(0)

    def test_kc2_and_describe(self):
        F = FanoNumerics(Fraction(1, 2), Basket.index2(13))
        assert F.kc2 == Fraction(9, 2)
        assert F.basket.describe() == "13x1/2(1,1,1)"
        assert Basket().describe() == "empty"
        assert kc2_inequality(F)


class TestRiemannRoch:
    """Tests for chi(mK) and the dimensions derived from it."""

    @settings(max_examples=200, deadline=None)
    @given(fano_numerics())
    def test_two_formulas_agree(self, F):
        """The closed form for dim|-K| equals chi(-K) - 1 on random baskets."""
        closed = F.K3 / 2 + 2 - sum((P.anticanonical_term for P in F.basket), Fraction(0))
        assert closed == rr_chi(-1, F) - 1

    @settings(max_examples=100, deadline=None)
    @given(basket_points(), st.integers(min_value=-6, max_value=6))
    def test_local_contribution(self, P, k):
        """c_P vanishes on multiples of r and has the closed form at m = -1."""
        assert local_contribution(k * P.r, P) == 0
        closed = Fraction(P.r ** 2 - 1, 12 * P.r) - Fraction(P.b * (P.r - P.b), 2 * P.r)
        assert local_contribution(-1, P) == closed
        assert local_contribution(k + P.r, P) == local_contribution(k, P)

    @pytest.mark.parametrize("m,r,b,value", [(-1, 2, 1, Fraction(-1, 8)), (1, 3, 1, Fraction(-2, 9)), (2, 3, 1, Fraction(-1, 9))])
    def test_local_contribution_values(self, m, r, b, value):
        assert local_contribution(m, BasketPoint(r, b)) == value

    @pytest.mark.parametrize("g", range(2, 13))
    def test_gorenstein(self, g):
        """Empty basket: dim|-K| = g + 1 and dim|-2K| = 5g - 1."""
        F = FanoNumerics.gorenstein(g)
        assert dim_anticanonical(F) == g + 1
        assert dim_minus_2k(F) == 5 * g - 1
        assert rr_chi(0, F) == 1

    @pytest.mark.parametrize("K3,n", [(Fraction(1, 2), 13), (Fraction(1), 14), (Fraction(3, 2), 15), (Fraction(5), 2)])
    def test_index_two_closed_forms(self, K3, n):
        """n points 1/2(1,1,1): the closed forms match Riemann-Roch."""
        F = FanoNumerics(K3, Basket.index2(n))
        assert index2_dims(K3, n) == (dim_anticanonical(F), dim_minus_2k(F))

    def test_thirteen_points(self):
        """(-K)^3 = 1/2 with 13 points: |-K| is empty and dim|-2K| = 2."""
        F = FanoNumerics(Fraction(1, 2), Basket.index2(13))
        assert dim_anticanonical(F) == -1
        assert dim_minus_2k(F) == 2

    def test_non_integral_dimension(self):
        """An inconsistent (-K)^3 gives a non-integral dimension."""
        with pytest.raises(ArithmeticDomainError):
            dim_anticanonical(FanoNumerics(Fraction(1, 3), Basket.from_pairs([(3, 1)])))


class TestEnumerations:
    """Tests for the orbit configurations of the non-Gorenstein locus."""

    def test_kb_bound_length(self):
        """16 points of type 1/2(1,1,1) reach sum(r - 1/r) = 24."""
        assert kb_bound_length() == 16

    def test_sigma_table(self):
        assert sigma_table() == {
            "moderate-7": [7],
            "fixed-pairs": [2, 4, 6, 8, 10, 12, 14],
            "fixed-pairs+real-7": [7, 9, 11, 13, 15],
            "two-real-7": [14],
            "conjugate-7-pair": [14],
            "orbit-14": [14],
        }

    def test_configs_below_bound(self):
        for config in enumerate_sigma_configs():
            assert config.basket_length < 16
            assert config.basket().bm_sum < 24

    def test_orbit_length_choice(self):
        """Without orbits of length 14 the orbit-14 row disappears and nothing else changes."""
        without_14 = sigma_table(enumerate_sigma_configs(orbit_lengths=(7, 8)))
        full = sigma_table()
        assert "orbit-14" not in without_14
        assert without_14 == {row: sizes for row, sizes in full.items() if row != "orbit-14"}

    def test_empty_anticanonical(self):
        rows = enumerate_empty_anticanonical()
        assert [[str(r.K3), r.basket_length, r.description, r.dim_minus_2k] for r in rows] == [
            ["1/2", 13, "13x1/2(1,1,1)", 2],
            ["1", 14, "7 moderate aw2", 3],
            ["1", 14, "14x1/2(1,1,1)", 3],
            ["3/2", 15, "15x1/2(1,1,1)", 4],
        ]

    def test_predicate_order_irrelevant(self):
        """Reversing the predicate list does not change the rows."""
        from orbifold.enumerate import EMPTY_ANTICANONICAL_PREDICATES

        assert enumerate_empty_anticanonical(list(reversed(EMPTY_ANTICANONICAL_PREDICATES))) == enumerate_empty_anticanonical()


class TestFanoTable:
    """Tests for the bundled smooth Fano table."""

    @pytest.fixture(scope="class")
    def fano(self):
        return load_fano_table()

    def test_admissible_genera(self, fano):
        """Genera whose smoothing allows 21 singular points."""
        assert admissible_gorenstein_genera(fano) == [6, 10, 11, 12]
        assert max_sing_bound(fano) == 29

    def test_sing_bound(self, fano):
        assert sing_bound(8, fano, rho=1) == 24

    def test_missing_degree(self, fano):
        with pytest.raises(DataError):
            sing_bound(50, fano)

    @pytest.mark.parametrize("text,error", [
        ("2 1 52 1-1\n", ParseError),
        ("2 1 x 1-1 1\n", ParseError),
        ("3 1 0 1-1 1\n", DataError),
        ("2 1 52 1-1 1\n4 1 30 1-1 1\n", DataError),
    ])
    def test_parse_errors(self, text, error):
        with pytest.raises(error):
            parse_fano_table(text)
