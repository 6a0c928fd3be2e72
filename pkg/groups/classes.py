"""
Conjugacy classes and power maps.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List

from sympy import factorint, primerange

from exact.cyclotomic import lcm
from groups.model import GroupModel

logger = logging.getLogger(__name__)


def compose_power_maps(power_maps: Dict[int, List[int]], orders: List[int], t: int, k: int) -> int:
    """Class of g^k for g in class t, composing prime power maps."""
    o = orders[t]
    k %= o
    if k == 0:
        return 0
    c = t
    for q, e in factorint(k).items():
        for _ in range(e):
            c = power_maps[q][c]
    return c


@dataclass
class ConjClassData:
    """
    Conjugacy classes of a materialized group.

    Class 0 is the identity class. Classes are ordered by
    (element order, class size, discovery order).

    Attributes:
        reps: Representative element index per class
        sizes: Class sizes
        orders: Element order per class
        class_of: Class index of every element
        members: Element indices of every class
        power_maps: prime -> class index map for primes up to the largest element order
    """

    reps: List[int]
    sizes: List[int]
    orders: List[int]
    class_of: List[int]
    members: List[List[int]]
    power_maps: Dict[int, List[int]] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.reps)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders)

    @property
    def group_order(self) -> int:
        return sum(self.sizes)

    def power_class(self, t: int, k: int) -> int:
        """Class of g^k for g in class t."""
        return compose_power_maps(self.power_maps, self.orders, t, k)

    def inverse_class(self, t: int) -> int:
        return self.power_class(t, -1)


def conjugacy_data(G: GroupModel) -> ConjClassData:
    """
    Partition G into conjugacy classes.

    Classes are orbits under conjugation by the generators, explored
    breadth-first; power maps come from powering one representative.
    """
    start = time.time()
    n = G.order
    gens = G.gen_indices
    gens_inv = [G.inv(g) for g in gens]
    class_of = [-1] * n
    raw: List[List[int]] = []
    for x in range(n):
        if class_of[x] != -1:
            continue
        cid = len(raw)
        class_of[x] = cid
        orbit = [x]
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g, gi in zip(gens, gens_inv):
                    z = G.mul(G.mul(gi, y), g)
                    if class_of[z] == -1:
                        class_of[z] = cid
                        orbit.append(z)
                        nxt.append(z)
            frontier = nxt
        raw.append(orbit)

    raw_orders = [G.element_order(orbit[0]) for orbit in raw]
    perm = sorted(range(len(raw)), key=lambda c: (raw_orders[c], len(raw[c]), c))
    relabel = {old: new for new, old in enumerate(perm)}
    members = [sorted(raw[old]) for old in perm]
    reps = [m[0] for m in members]
    orders = [raw_orders[old] for old in perm]
    class_of = [relabel[c] for c in class_of]

    data = ConjClassData(
        reps=reps,
        sizes=[len(m) for m in members],
        orders=orders,
        class_of=class_of,
        members=members,
    )
    max_order = max(orders)
    for q in primerange(2, max_order + 1):
        data.power_maps[q] = [class_of[G.pow(r, q)] for r in reps]
    logger.info(
        f"✅ {G.name}: {data.count} classes, exponent {data.exponent} ({time.time() - start:.2f}s)"
    )
    return data


def class_fusion(H: GroupModel, H_classes: ConjClassData, G: GroupModel, G_classes: ConjClassData) -> List[int]:
    """
    Fusion map of a subgroup's classes into the classes of G.

    H must be built with the same element arithmetic as G, so each
    representative of H can be located in G by its key.
    """
    return [G_classes.class_of[G.index_of(H.element(r))] for r in H_classes.reps]
