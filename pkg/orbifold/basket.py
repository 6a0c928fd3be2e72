"""
Baskets of terminal quotient points and the numerical data of a Fano 3-fold.

(-K)^3 is stored positive throughout; formulas written in terms of K^3
negate at the call site.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Tuple

from errors import ArithmeticDomainError


@dataclass(frozen=True, order=True)
class BasketPoint:
    """
    A virtual quotient point 1/r(1, b, -b).

    (r, b) and (r, r - b) describe the same point; the constructor keeps
    the representative with b <= r/2.
    """

    r: int
    b: int

    def __post_init__(self):
        if self.r < 2:
            raise ArithmeticDomainError(f"basket index must be >= 2, got {self.r}")
        if not 0 < self.b < self.r or gcd(self.b, self.r) != 1:
            raise ArithmeticDomainError(f"1/{self.r}(1,{self.b},-{self.b}) is not terminal")
        if 2 * self.b > self.r:
            object.__setattr__(self, "b", self.r - self.b)

    @property
    def bm_term(self) -> Fraction:
        """r - 1/r."""
        return Fraction(self.r) - Fraction(1, self.r)

    @property
    def anticanonical_term(self) -> Fraction:
        """b(r - b)/(2r)."""
        return Fraction(self.b * (self.r - self.b), 2 * self.r)

    def __str__(self) -> str:
        return f"1/{self.r}(1,{self.b},{self.r - self.b})"


@dataclass(frozen=True)
class Basket:
    """Finite multiset of basket points, kept sorted."""

    points: Tuple[BasketPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(self.points)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "Basket":
        return cls(tuple(BasketPoint(r, b) for r, b in pairs))

    @classmethod
    def index2(cls, n: int) -> "Basket":
        """n points of type 1/2(1,1,1)."""
        if n < 0:
            raise ArithmeticDomainError(f"negative basket length {n}")
        return cls(tuple(BasketPoint(2, 1) for _ in range(n)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def indices(self) -> List[int]:
        return [P.r for P in self.points]

    @property
    def bm_sum(self) -> Fraction:
        """Sum of r - 1/r over the basket."""
        return sum((P.bm_term for P in self.points), Fraction(0))

    @property
    def all_index_two(self) -> bool:
        return all(P.r == 2 for P in self.points)

    def describe(self) -> str:
        if not self.points:
            return "empty"
        counts = Counter(self.points)
        return " + ".join(f"{n}x{P}" if n > 1 else str(P) for P, n in sorted(counts.items()))


@dataclass(frozen=True)
class FanoNumerics:
    """
    (-K)^3 together with a basket.

    Attributes:
        K3: (-K)^3, positive for a Fano 3-fold
        basket: The basket of the singularities
    """

    K3: Fraction
    basket: Basket = field(default_factory=Basket)

    def __post_init__(self):
        object.__setattr__(self, "K3", Fraction(self.K3))
        if self.K3 <= 0:
            raise ArithmeticDomainError(f"(-K)^3 must be positive, got {self.K3}")
        if self.basket.all_index_two and (2 * self.K3).denominator != 1:
            raise ArithmeticDomainError(f"index-2 basket needs 2(-K)^3 integral, got (-K)^3 = {self.K3}")

    @classmethod
    def gorenstein(cls, g: int) -> "FanoNumerics":
        """Empty basket with (-K)^3 = 2g - 2."""
        return cls(Fraction(2 * g - 2), Basket())

    @property
    def kc2(self) -> Fraction:
        """-K.c2 from 24 = -K.c2 + sum(r - 1/r)."""
        return Fraction(24) - self.basket.bm_sum
