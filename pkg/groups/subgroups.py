"""
Subgroup classes up to conjugacy, action sizes and Sylow obstructions.

Subgroups are found by extension: cyclic subgroups first, then
<H, g> for every class representative H found so far and every g,
up to three generators. Each new subgroup registers all of its
conjugates as bitmasks so later hits are recognized immediately.
"""

from __future__ import annotations

import logging
import math
import time
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy import divisors, factorint

from config import SUBGROUP_SEARCH_MAX_ORDER
from errors import CapExceeded
from groups.classes import ConjClassData, conjugacy_data
from groups.model import GroupModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsoTag:
    """Order, element-order statistics and abelian invariants."""

    order: int
    order_stats: Tuple[Tuple[int, int], ...]
    abelian_invariants: Tuple[int, ...]


@dataclass
class SubgroupClass:
    """
    One conjugacy class of subgroups.

    Attributes:
        elements: Sorted element indices of the representative
        order: |H|
        index: [G:H]
        tag: Isomorphism tag
        conjugates: Number of conjugates of H
        normalizer_order: |N_G(H)|, counted directly
        name: Structural name (C7, D4, S4, C7:C3, ...)
        generators: Element indices generating the representative
    """

    elements: Tuple[int, ...]
    order: int
    index: int
    tag: IsoTag
    conjugates: int
    normalizer_order: int
    name: str
    generators: Tuple[int, ...]
    mask: int = 0
    conjugate_masks: Tuple[int, ...] = ()

    @property
    def is_cyclic(self) -> bool:
        return any(o == self.order for o, _ in self.tag.order_stats)

    def contains_conjugate_of(self, other: "SubgroupClass") -> bool:
        """True if some conjugate of `other` lies in this representative."""
        return any(m & ~self.mask == 0 for m in other.conjugate_masks)


def _mask(elements: Sequence[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def _order_stats(G: GroupModel, elements: Sequence[int], orders: Dict[int, int]) -> Tuple[Tuple[int, int], ...]:
    counts = Counter(orders[x] for x in elements)
    return tuple(sorted(counts.items()))


def abelian_invariants(G: GroupModel, elements: Sequence[int]) -> Tuple[int, ...]:
    """Elementary divisors of H/[H,H], sorted."""
    H = list(elements)
    comms = {G.commutator(a, b) for a in H for b in H}
    D = set(G.closure(sorted(comms)))
    coset_of: Dict[int, int] = {}
    reps: List[int] = []
    for x in H:
        if x in coset_of:
            continue
        cid = len(reps)
        reps.append(x)
        for d in D:
            coset_of[G.mul(x, d)] = cid
    m = len(reps)
    if m == 1:
        return ()

    def coset_order(x: int) -> int:
        k, y = 1, x
        while y not in D:
            y = G.mul(y, x)
            k += 1
        return k

    qorders = [coset_order(x) for x in reps]
    out: List[int] = []
    for p, e in factorint(m).items():
        counts = [sum(1 for o in qorders if (p ** k) % o == 0) for k in range(e + 1)]
        ranks = [round(math.log(counts[k] // counts[k - 1], p)) for k in range(1, e + 1)]
        # ranks[k-1] = number of cyclic factors of order >= p^k
        for k in range(1, e + 1):
            higher = ranks[k] if k < e else 0
            out.extend([p ** k] * (ranks[k - 1] - higher))
    return tuple(sorted(out))


def structure_name(tag: IsoTag) -> str:
    n = tag.order
    stats = dict(tag.order_stats)
    if n == 1:
        return "1"
    abelian = math.prod(tag.abelian_invariants) == n if tag.abelian_invariants else False
    if n in stats:
        return f"C{n}"
    if abelian:
        inv = Counter(tag.abelian_invariants)
        if set(inv) == {2}:
            return f"C2^{inv[2]}"
        return "x".join(f"C{d}" for d in sorted(tag.abelian_invariants))
    half = n // 2
    if n % 2 == 0 and half >= 3 and stats.get(half, 0) > 0 and stats.get(2, 0) >= half:
        return f"D{half}"
    if n == 24 and stats == {1: 1, 2: 9, 3: 8, 4: 6}:
        return "S4"
    if n == 12 and stats == {1: 1, 2: 3, 3: 8}:
        return "A4"
    if n == 60 and stats == {1: 1, 2: 15, 3: 20, 5: 24}:
        return "A5"
    if n == 21:
        return "C7:C3"
    if n == 56 and stats == {1: 1, 2: 7, 7: 48}:
        return "C2^3:C7"
    return f"G{n}"


class _Search:
    def __init__(self, G: GroupModel, classes: ConjClassData):
        self.G = G
        self.classes = classes
        self.orders = {x: classes.orders[classes.class_of[x]] for x in range(G.order)}
        self.seen: Set[int] = set()
        self.found: List[SubgroupClass] = []
        self._inv = [G.inv(g) for g in range(G.order)]

    def register(self, elements: List[int], gens: Tuple[int, ...]) -> Optional[SubgroupClass]:
        mask = _mask(elements)
        if mask in self.seen:
            return None
        G = self.G
        conj: Set[int] = set()
        stabilizer = 0
        for g in range(G.order):
            gi = self._inv[g]
            cm = 0
            for h in elements:
                cm |= 1 << G.mul(G.mul(gi, h), g)
            conj.add(cm)
            if cm == mask:
                stabilizer += 1
        self.seen |= conj
        tag = IsoTag(
            order=len(elements),
            order_stats=_order_stats(G, elements, self.orders),
            abelian_invariants=abelian_invariants(G, elements),
        )
        cls = SubgroupClass(
            elements=tuple(elements),
            order=len(elements),
            index=G.order // len(elements),
            tag=tag,
            conjugates=len(conj),
            normalizer_order=stabilizer,
            name=structure_name(tag),
            generators=gens,
            mask=mask,
            conjugate_masks=tuple(sorted(conj)),
        )
        self.found.append(cls)
        return cls


def subgroup_lattice(G: GroupModel, classes: Optional[ConjClassData] = None, max_generators: int = 3) -> List[SubgroupClass]:
    """
    All subgroup classes of G generated by at most `max_generators` elements,
    including the trivial subgroup and G itself, sorted by (order, name).
    """
    if G.order > SUBGROUP_SEARCH_MAX_ORDER:
        raise CapExceeded(f"subgroup search limited to order {SUBGROUP_SEARCH_MAX_ORDER}, {G.name} has {G.order}")
    start = time.time()
    classes = classes or conjugacy_data(G)
    search = _Search(G, classes)
    n = G.order
    half = n // 2
    search.register([0], ())
    frontier: List[SubgroupClass] = []
    for r in classes.reps[1:]:
        cls = search.register(G.closure([r]), (r,))
        if cls is not None:
            frontier.append(cls)
    for _ in range(max_generators - 1):
        new: List[SubgroupClass] = []
        for H in frontier:
            for g in range(1, n):
                if H.mask >> g & 1:
                    continue
                K = G.closure(list(H.generators) + [g], stop_above=half)
                cls = search.register(K, H.generators + (g,))
                if cls is not None:
                    new.append(cls)
        frontier = new
    if (1 << n) - 1 not in search.seen:
        search.register(list(range(n)), tuple(G.gen_indices))
    lattice = sorted(search.found, key=lambda c: (c.order, c.name, c.elements))
    logger.info(f"✅ {G.name}: {len(lattice)} subgroup classes ({time.time() - start:.2f}s)")
    return lattice


def subgroup_classes(G: GroupModel, min_order: int = 2, classes: Optional[ConjClassData] = None) -> List[SubgroupClass]:
    """Nontrivial proper subgroup classes of order >= min_order."""
    lattice = subgroup_lattice(G, classes)
    return [c for c in lattice if max(2, min_order) <= c.order < G.order]


def maximal_subgroup_classes(lattice: List[SubgroupClass], group_order: int) -> List[SubgroupClass]:
    proper = [c for c in lattice if c.order < group_order]
    out = []
    for H in proper:
        if not any(K.order > H.order and K.order % H.order == 0 and K.contains_conjugate_of(H) for K in proper):
            out.append(H)
    return out


def double_coset_count(G: GroupModel, H: Sequence[int]) -> int:
    remaining = set(range(G.order))
    count = 0
    while remaining:
        g = min(remaining)
        block = {G.mul(G.mul(h1, g), h2) for h1 in H for h2 in H}
        remaining -= block
        count += 1
    return count


def transitive_action_sizes(G: GroupModel, bound: int, lattice: Optional[List[SubgroupClass]] = None) -> List[int]:
    """Sorted {[G:H] : H proper, [G:H] <= bound}."""
    lattice = lattice if lattice is not None else subgroup_lattice(G)
    return sorted({c.index for c in lattice if c.order < G.order and c.index <= bound})


def doubly_transitive_sizes(G: GroupModel, bound: int, lattice: Optional[List[SubgroupClass]] = None) -> List[int]:
    """Action sizes <= bound realized by a doubly transitive coset action."""
    lattice = lattice if lattice is not None else subgroup_lattice(G)
    sizes = set()
    for c in lattice:
        if c.order < G.order and c.index <= bound and c.index not in sizes:
            if double_coset_count(G, c.elements) == 2:
                sizes.add(c.index)
    return sorted(sizes)


def curve_orbit_lengths(G: GroupModel, classes: Optional[ConjClassData] = None) -> List[int]:
    """Orbit lengths with cyclic stabilizers: {|G|/o : o an element order}."""
    classes = classes or conjugacy_data(G)
    return sorted({G.order // o for o in classes.orders})


def cyclic_normalizer_order(G: GroupModel, c: int) -> int:
    """|N_G(<c>)| by direct count."""
    cyc = set(G.closure([c]))
    return sum(1 for g in range(G.order) if G.conjugate(c, g) in cyc)


def _forced_normal_sylows(m: int) -> Dict[int, int]:
    """Primes q | m whose Sylow subgroup is normal in every group of order m (by counting)."""
    forced = {}
    for q, a in factorint(m).items():
        cofactor = m // q ** a
        if [d for d in divisors(cofactor) if d % q == 1] == [1]:
            forced[q] = a
    return forced


def subgroup_order_obstruction(G: GroupModel, m: int, classes: Optional[ConjClassData] = None) -> Optional[str]:
    """
    Reason why G has no subgroup of order m, or None if undecided.

    Rules: Lagrange; a forced-normal Sylow q-subgroup of prime order puts H
    inside the normalizer of a cyclic group of order q; two forced-normal
    Sylows of coprime orders force an element of order q1*q2.
    """
    if G.order % m:
        return f"{m} does not divide |G| = {G.order}"
    classes = classes or conjugacy_data(G)
    forced = _forced_normal_sylows(m)
    element_orders = set(classes.orders)
    for q, a in forced.items():
        if a != 1:
            continue
        norms = [cyclic_normalizer_order(G, r) for r, o in zip(classes.reps, classes.orders) if o == q]
        if norms and all(nq % m for nq in norms):
            return f"a normal Sylow {q}-subgroup forces H <= N(C{q}) of order {max(norms)}, not divisible by {m}"
    primes = sorted(forced)
    for i, q1 in enumerate(primes):
        for q2 in primes[i + 1:]:
            if not any(o % (q1 * q2) == 0 for o in element_orders):
                return f"normal Sylow {q1}- and {q2}-subgroups force an element of order {q1 * q2}, which G lacks"
    return None
