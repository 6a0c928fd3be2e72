"""
Orbifold Riemann-Roch on a terminal Fano 3-fold.

    chi(mK) = (1/12) m(m-1)(2m-1) K^3 + (m/12) K.c2 + 1 + sum c_P(mK)

with K^3 = -(-K)^3 and K.c2 = -(-K.c2). Residues are taken in {0, ..., r-1}.
"""

import logging
from fractions import Fraction

from errors import ArithmeticDomainError
from orbifold.basket import Basket, BasketPoint, FanoNumerics

logger = logging.getLogger(__name__)

BM_LIMIT = Fraction(24)


def local_contribution(m: int, P: BasketPoint) -> Fraction:
    """
    c_P(mK) for a basket point 1/r(1, b, -b).

    Zero when r divides m. At m = -1 it agrees with
    (r^2 - 1)/(12r) - b(r - b)/(2r).
    """
    r, b = P.r, P.b
    m_bar = m % r
    total = -Fraction(m_bar * (r * r - 1), 12 * r)
    for j in range(1, m_bar):
        t = (b * j) % r
        total += Fraction(t * (r - t), 2 * r)
    return total


def kc2_from_basket(B: Basket) -> Fraction:
    """-K.c2 = 24 - sum(r - 1/r)."""
    return BM_LIMIT - B.bm_sum


def bm_filter(B: Basket) -> bool:
    """True iff sum(r - 1/r) < 24, i.e. -K.c2 > 0."""
    return B.bm_sum < BM_LIMIT


def rr_chi(m: int, F: FanoNumerics) -> Fraction:
    """Exact chi(mK_X)."""
    K3 = -F.K3
    Kc2 = -F.kc2
    value = Fraction(m * (m - 1) * (2 * m - 1), 12) * K3 + Fraction(m, 12) * Kc2 + 1
    return value + sum((local_contribution(m, P) for P in F.basket), Fraction(0))


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticDomainError(f"{what} = {value} is not an integer; basket and (-K)^3 are inconsistent")
    return int(value)


def dim_anticanonical(F: FanoNumerics) -> int:
    """
    dim|-K| = (1/2)(-K)^3 + 2 - sum b(r - b)/(2r).

    Cross-checked against chi(-K) - 1.

    Raises:
        ArithmeticDomainError: the value is not integral
    """
    closed = F.K3 / 2 + 2 - sum((P.anticanonical_term for P in F.basket), Fraction(0))
    via_chi = rr_chi(-1, F) - 1
    if closed != via_chi:
        raise ArithmeticDomainError(f"dim|-K|: closed form {closed} disagrees with chi(-K) - 1 = {via_chi}")
    return _integral(closed, "dim|-K|")


def dim_minus_2k(F: FanoNumerics) -> int:
    """dim|-2K| = chi(-2K) - 1."""
    return _integral(rr_chi(-2, F) - 1, "dim|-2K|")


def index2_dims(K3: Fraction, n: int) -> tuple:
    """
    Closed forms for n points 1/2(1,1,1):
    dim|-K| = (1/2)(-K)^3 + 2 - n/4 and dim|-2K| = (5/2)(-K)^3 + 4 - n/4.
    """
    K3 = Fraction(K3)
    return K3 / 2 + 2 - Fraction(n, 4), Fraction(5, 2) * K3 + 4 - Fraction(n, 4)


def kc2_inequality(F: FanoNumerics) -> bool:
    """
    -K.c2 >= (1/4)(-K)^3.

    Not known in general, so callers may report it but never filter on it.
    """
    return F.kc2 >= F.K3 / 4
