"""
Riemann-Hurwitz signatures and generating-vector search.

A signature (g0; m_1..m_r) has genus g when
    2g - 2 = |G| * (2*g0 - 2 + sum(1 - 1/m_i)).
It is realized by G when there are a_j, b_j, x_i in G with ord(x_i) = m_i,
prod [a_j, b_j] * prod x_i = 1 and the whole tuple generating G.

Only genera g >= 2 are enumerated (signatures of positive area). Actions
on curves of genus 0 and 1 are handled by the low-genus case analyses.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from config import GENUS_SEARCH_MAX_ORDER, SEARCH_CAP
from errors import CapExceeded
from groups.classes import ConjClassData, conjugacy_data
from groups.model import GroupModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Signature:
    g0: int
    periods: Tuple[int, ...]

    def area(self) -> Fraction:
        return 2 * self.g0 - 2 + sum((1 - Fraction(1, m) for m in self.periods), Fraction(0))

    def genus(self, group_order: int) -> Optional[int]:
        twice = group_order * self.area()
        if twice.denominator != 1 or twice.numerator % 2:
            return None
        return twice.numerator // 2 + 1

    def __str__(self) -> str:
        return f"({self.g0}; {', '.join(map(str, self.periods))})"


def hurwitz_min_genus(order: int) -> int:
    """Smallest g >= 2 with order <= 84(g-1)."""
    if order < 2:
        raise ValueError("order must be at least 2")
    return max(2, math.ceil(order / 84) + 1)


def signatures(group_order: int, periods_allowed: Sequence[int], g_max: int) -> Dict[int, List[Signature]]:
    """
    All signatures with periods drawn from `periods_allowed` giving
    a genus 2 <= g <= g_max, grouped by genus.
    """
    allowed = sorted(set(m for m in periods_allowed if m > 1))
    limit = Fraction(2 * g_max - 2, group_order)
    out: Dict[int, List[Signature]] = {}

    def extend(g0: int, prefix: List[int], area: Fraction, start: int) -> None:
        if area > 0:
            sig = Signature(g0, tuple(prefix))
            g = sig.genus(group_order)
            if g is not None and 2 <= g <= g_max:
                out.setdefault(g, []).append(sig)
        for k in range(start, len(allowed)):
            m = allowed[k]
            nxt = area + 1 - Fraction(1, m)
            if nxt > limit:
                break
            prefix.append(m)
            extend(g0, prefix, nxt, k)
            prefix.pop()

    g0 = 0
    while 2 * g0 - 2 <= limit:
        extend(g0, [], Fraction(2 * g0 - 2), 0)
        g0 += 1
    for sigs in out.values():
        sigs.sort()
    return out


@dataclass
class _Budget:
    cap: int
    used: int = 0

    def spend(self, n: int = 1) -> bool:
        self.used += n
        return self.used <= self.cap


class _VectorSearch:
    def __init__(self, G: GroupModel, classes: ConjClassData, cap: int):
        self.G = G
        self.classes = classes
        self.cap = cap
        self.half = G.order // 2
        self.by_order: Dict[int, List[int]] = {}
        for x in range(G.order):
            self.by_order.setdefault(classes.orders[classes.class_of[x]], []).append(x)
        self.reps_by_order: Dict[int, List[int]] = {}
        for r, o in zip(classes.reps, classes.orders):
            self.reps_by_order.setdefault(o, []).append(r)
        self.order_of = [classes.orders[classes.class_of[x]] for x in range(G.order)]

    def _generates(self, elems: List[int]) -> bool:
        return len(self.G.closure(elems, stop_above=self.half)) == self.G.order

    def realizable(self, sig: Signature) -> bool:
        """Search for a generating vector; raises CapExceeded when the budget runs out."""
        G = self.G
        budget = _Budget(self.cap)
        periods = sig.periods

        def tail(prefix_prod: int, chosen: List[int], i: int) -> bool:
            # choose x_i .. x_{r-1}; x_r closes the product
            if i == len(periods) - 1:
                last = G.inv(prefix_prod)
                if self.order_of[last] != periods[-1]:
                    return False
                return self._generates(chosen + [last])
            for x in self.by_order.get(periods[i], ()):
                if not budget.spend():
                    raise CapExceeded(f"generating-vector search for {sig}", undecided=[str(sig)])
                if tail(G.mul(prefix_prod, x), chosen + [x], i + 1):
                    return True
            return False

        def handles(j: int, prefix_prod: int, chosen: List[int]) -> bool:
            if j == sig.g0:
                if not periods:
                    return prefix_prod == 0 and self._generates(chosen)
                if len(periods) == 1:
                    last = G.inv(prefix_prod)
                    return self.order_of[last] == periods[0] and self._generates(chosen + [last])
                return tail(prefix_prod, chosen, 0)
            a_range = self.classes.reps if j == 0 else range(G.order)
            for a in a_range:
                for b in range(G.order):
                    if not budget.spend():
                        raise CapExceeded(f"generating-vector search for {sig}", undecided=[str(sig)])
                    c = G.commutator(a, b)
                    if handles(j + 1, G.mul(prefix_prod, c), chosen + [a, b]):
                        return True
            return False

        if sig.g0 == 0:
            if len(periods) < 2:
                return False
            for x1 in self.reps_by_order.get(periods[0], ()):
                if len(periods) == 2:
                    if self.order_of[G.inv(x1)] == periods[1] and self._generates([x1]):
                        return True
                    continue
                if tail(x1, [x1], 1):
                    return True
            return False
        return handles(0, 0, [])


@dataclass
class GenusSearchResult:
    """Per-genus witnessed signatures and any signatures left undecided."""

    witnessed: Dict[int, List[Signature]] = field(default_factory=dict)
    undecided: List[Tuple[int, Signature]] = field(default_factory=list)


def search_signatures(
    G: GroupModel,
    g_max: int,
    classes: Optional[ConjClassData] = None,
    cap: int = SEARCH_CAP,
    genera: Optional[Sequence[int]] = None,
    exhaustive: bool = False,
) -> GenusSearchResult:
    """
    Decide realizability of every signature of genus <= g_max.

    Unless `exhaustive`, a genus stops being searched once one of its
    signatures is witnessed.
    """
    if G.order > GENUS_SEARCH_MAX_ORDER:
        raise CapExceeded(f"generating-vector search limited to order {GENUS_SEARCH_MAX_ORDER}, {G.name} has {G.order}")
    start = time.time()
    classes = classes or conjugacy_data(G)
    sigs = signatures(G.order, classes.orders, g_max)
    search = _VectorSearch(G, classes, cap)
    result = GenusSearchResult()
    for g in sorted(sigs):
        if genera is not None and g not in genera:
            continue
        for sig in sigs[g]:
            try:
                ok = search.realizable(sig)
            except CapExceeded:
                logger.warning(f"⚠️ {G.name}: signature {sig} (genus {g}) undecided within cap {cap}")
                result.undecided.append((g, sig))
                continue
            if ok:
                result.witnessed.setdefault(g, []).append(sig)
                if not exhaustive:
                    break
    logger.info(
        f"✅ {G.name}: {len(result.witnessed)} genera witnessed up to {g_max} ({time.time() - start:.2f}s)"
    )
    return result


def genus_spectrum(
    G: GroupModel,
    g_max: int,
    search: bool = True,
    classes: Optional[ConjClassData] = None,
    cap: int = SEARCH_CAP,
) -> List[int]:
    """
    Genera 2 <= g <= g_max of curves with a faithful G-action.

    With search=False only signature arithmetic is used, giving a superset.

    Raises:
        CapExceeded: some genus has no witness and an undecided signature
    """
    classes = classes or conjugacy_data(G)
    if not search:
        return sorted(signatures(G.order, classes.orders, g_max))
    result = search_signatures(G, g_max, classes=classes, cap=cap)
    open_genera = sorted({g for g, _ in result.undecided if g not in result.witnessed})
    if open_genera:
        undecided = [f"g={g} {sig}" for g, sig in result.undecided if g in open_genera]
        raise CapExceeded(f"{G.name}: genera {open_genera} undecided", undecided=undecided)
    return sorted(result.witnessed)


def admissible_signatures(
    G: GroupModel,
    g: int,
    classes: Optional[ConjClassData] = None,
    cap: int = SEARCH_CAP,
) -> List[Signature]:
    """
    Signatures of genus g realized by a generating vector.

    Raises:
        ValueError: g < 2
        CapExceeded: some signature of genus g undecided
    """
    if g < 2:
        raise ValueError(f"signatures are enumerated for genus >= 2, got {g}")
    result = search_signatures(G, g, classes=classes, cap=cap, genera=[g], exhaustive=True)
    if result.undecided:
        raise CapExceeded(f"{G.name}: genus {g} signatures undecided", undecided=[str(s) for _, s in result.undecided])
    return result.witnessed.get(g, [])


def min_orbit_length(G: GroupModel, g: int, classes: Optional[ConjClassData] = None) -> Optional[int]:
    """
    Shortest G-orbit on a genus-g curve with a G-action: |G|/max period over
    admissible signatures, or |G| when every action is free. None if no action
    exists. Defined for g >= 2.
    """
    sigs = admissible_signatures(G, g, classes)
    if not sigs:
        return None
    return min(G.order // max(s.periods) if s.periods else G.order for s in sigs)
