"""
Enumerations over non-Gorenstein configurations of a real PSL(2,7)-Fano 3-fold.

Singular points come as G-orbits. Constraint predicates are applied to a
finite grid of candidates; the order in which they are applied does not
change the output.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence

from orbifold.basket import Basket, FanoNumerics
from orbifold.rr import BM_LIMIT, bm_filter, dim_minus_2k, rr_chi

logger = logging.getLogger(__name__)

QUOTIENT = "1/2(1,1,1)"
MODERATE = "moderate aw2"

# basket points contributed by one singular point
BASKET_WEIGHT = {QUOTIENT: 1, MODERATE: 2}

# transitive PSL(2,7)-sets with fewer than 16 points
DEFAULT_ORBIT_LENGTHS = (7, 8, 14)
# stabilizer C7:C3 fixes no terminal point of index 2
EXCLUDED_ORBIT_LENGTHS = (8,)

MAX_K3 = Fraction(64)


@dataclass(frozen=True)
class SigmaConfig:
    """
    Orbit decomposition of the non-Gorenstein locus.

    Attributes:
        singularity: QUOTIENT or MODERATE (all points share one type)
        fixed_pairs: Pairs of complex conjugate G-fixed points
        real7: G-orbits of length 7 of real points
        conj7: Pairs of complex conjugate orbits of length 7
        orbit14: Orbits of length 14
    """

    singularity: str
    fixed_pairs: int = 0
    real7: int = 0
    conj7: int = 0
    orbit14: int = 0

    @property
    def size(self) -> int:
        return 2 * self.fixed_pairs + 7 * self.real7 + 14 * self.conj7 + 14 * self.orbit14

    @property
    def basket_length(self) -> int:
        return BASKET_WEIGHT[self.singularity] * self.size

    @property
    def row(self) -> str:
        """Row label of the orbit table."""
        if self.singularity == MODERATE:
            return "moderate-7"
        if self.real7 == 2:
            return "two-real-7"
        if self.conj7:
            return "conjugate-7-pair"
        if self.orbit14:
            return "orbit-14"
        if self.real7 == 1:
            return "fixed-pairs+real-7"
        return "fixed-pairs"

    def basket(self) -> Basket:
        return Basket.index2(self.basket_length)


SIGMA_ROWS = ("moderate-7", "fixed-pairs", "fixed-pairs+real-7", "two-real-7", "conjugate-7-pair", "orbit-14")


def kb_bound(config: SigmaConfig) -> Fraction:
    """Sum over the basket of r - 1/r; geometric configurations stay below 24."""
    return config.basket().bm_sum


def kb_bound_length(limit: Fraction = BM_LIMIT) -> int:
    """Smallest number of 1/2(1,1,1) points violating the bound."""
    n = 0
    while Basket.index2(n).bm_sum < limit:
        n += 1
    return n


def enumerate_sigma_configs(
    orbit_lengths: Sequence[int] = DEFAULT_ORBIT_LENGTHS,
    excluded_lengths: Sequence[int] = EXCLUDED_ORBIT_LENGTHS,
) -> List[SigmaConfig]:
    """
    All admissible orbit decompositions.

    Constraints: every point has the same analytic type; real G-fixed
    points do not occur, so fixed points come in conjugate pairs; points
    worse than 1/2(1,1,1) are not G-fixed; an orbit of length 7 that is
    invariant under conjugation consists of real points; orbit lengths
    outside `orbit_lengths` or inside `excluded_lengths` carry no singular
    points; the basket satisfies the Bogomolov-Miyaoka bound.
    """
    usable = set(orbit_lengths) - set(excluded_lengths)
    has7, has14 = 7 in usable, 14 in usable
    limit = kb_bound_length()
    out = []
    for singularity in (MODERATE, QUOTIENT):
        w = BASKET_WEIGHT[singularity]
        max_k = 0 if singularity == MODERATE else limit // 2
        for k, a, c, o in itertools.product(range(max_k + 1), range(3 if has7 else 1), range(2 if has7 else 1), range(2 if has14 else 1)):
            config = SigmaConfig(singularity, fixed_pairs=k, real7=a, conj7=c, orbit14=o)
            if config.size == 0 or w * config.size >= limit:
                continue
            if not bm_filter(config.basket()):
                continue
            out.append(config)
    out.sort(key=lambda s: (SIGMA_ROWS.index(s.row), s.size))
    logger.info(f"✅ {len(out)} orbit configurations admitted")
    return out


def sigma_table(configs: Optional[Iterable[SigmaConfig]] = None) -> Dict[str, List[int]]:
    """row label -> sorted sizes |Sigma|."""
    configs = enumerate_sigma_configs() if configs is None else configs
    table: Dict[str, List[int]] = {}
    for s in configs:
        table.setdefault(s.row, []).append(s.size)
    return {row: sorted(set(sizes)) for row, sizes in table.items()}


class AnticanonicalRow(NamedTuple):
    K3: Fraction
    basket_length: int
    description: str
    dim_minus_2k: int


def _describe(config: SigmaConfig) -> str:
    if config.singularity == MODERATE:
        return f"{config.size} {MODERATE}"
    return f"{config.size}x{QUOTIENT}"


Predicate = Callable[[Fraction, SigmaConfig], bool]


def _bm(K3: Fraction, config: SigmaConfig) -> bool:
    return bm_filter(config.basket())


def _empty_minus_k(K3: Fraction, config: SigmaConfig) -> bool:
    # chi(-K) = 0; a non-integral chi also fails here
    return rr_chi(-1, FanoNumerics(K3, config.basket())) == 0


EMPTY_ANTICANONICAL_PREDICATES: List[Predicate] = [_bm, _empty_minus_k]


def enumerate_empty_anticanonical(
    predicates: Optional[Sequence[Predicate]] = None,
    configs: Optional[Sequence[SigmaConfig]] = None,
    max_K3: Fraction = MAX_K3,
) -> List[AnticanonicalRow]:
    """
    Numerical cases with |-K| empty.

    Candidates are (-K)^3 in (1/2)Z between 1/2 and max_K3 paired with each
    admissible orbit configuration. Rows with the same (-K)^3 and point
    type are merged.
    """
    predicates = list(EMPTY_ANTICANONICAL_PREDICATES if predicates is None else predicates)
    configs = list(enumerate_sigma_configs() if configs is None else configs)
    rows = set()
    for twice in range(1, int(2 * max_K3) + 1):
        K3 = Fraction(twice, 2)
        for config in configs:
            if all(p(K3, config) for p in predicates):
                F = FanoNumerics(K3, config.basket())
                rows.add(AnticanonicalRow(K3, config.basket_length, _describe(config), dim_minus_2k(F)))
    return sorted(rows, key=lambda r: (r.K3, r.basket_length, MODERATE not in r.description))
