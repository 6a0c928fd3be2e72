"""
Finite groups materialized by breadth-first closure.

After closure every element is an index 0..|G|-1 (0 is the identity).
Right multiplication by each generator is stored as an index
permutation, and each element keeps its BFS parent, so a product
i*j is evaluated by replaying the generator word of j starting from i.
Small groups additionally get a full multiplication table.
"""

from __future__ import annotations

import logging
import time
from array import array
from collections import deque
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence

from config import CLOSURE_CAP, MULT_TABLE_MAX_ORDER
from errors import CapExceeded, GroupError

logger = logging.getLogger(__name__)


class GroupModel:
    """
    A finite group as an explicit, indexed element set.

    Attributes:
        name: Display name, e.g. "PSL(2,7)"
        ops: Element arithmetic (PermOps, PrimeMatrixOps, ...)
        generators: Generator elements in the ops representation
        elements: All elements; elements[0] is the identity
        order: |G|
    """

    def __init__(
        self,
        name: str,
        ops: Any,
        generators: List[Any],
        elements: List[Any],
        index: Dict[Hashable, int],
        right: List[array],
        parent: array,
        parent_gen: array,
    ):
        self.name = name
        self.ops = ops
        self.generators = generators
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self._right = right
        self._right_inv = [self._invert_perm(r) for r in right]
        self._parent = parent
        self._parent_gen = parent_gen
        self._words: Optional[List[Sequence[int]]] = None
        self._inv: Optional[List[int]] = None
        self._table: Optional[List[array]] = None
        self.gen_indices = [index[ops.key(g)] for g in generators]
        if self.order <= MULT_TABLE_MAX_ORDER:
            self._build_table()

    @staticmethod
    def _invert_perm(perm: array) -> array:
        out = array(perm.typecode, [0]) * len(perm)
        for i, j in enumerate(perm):
            out[j] = i
        return out

    def _typecode(self) -> str:
        return "H" if self.order < 65536 else "I"

    def _build_table(self) -> None:
        n = self.order
        table = []
        for i in range(n):
            row = array(self._typecode(), [0]) * n
            row[0] = i
            for j in range(1, n):
                row[j] = self._right[self._parent_gen[j]][row[self._parent[j]]]
            table.append(row)
        self._table = table

    # ----- words -----

    def depth(self, j: int) -> int:
        return len(self.word(j))

    def word(self, j: int) -> Sequence[int]:
        """Generator indices g_1..g_k with element j = g_1*...*g_k."""
        if self._words is None:
            words: List[Sequence[int]] = [()] * self.order
            # BFS order guarantees parents precede children
            for k in self._bfs_order():
                if k:
                    words[k] = tuple(words[self._parent[k]]) + (self._parent_gen[k],)
            self._words = words
        return self._words[j]

    def _bfs_order(self) -> Iterable[int]:
        return range(self.order)

    # ----- arithmetic on indices -----

    @property
    def has_table(self) -> bool:
        return self._table is not None

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        x = i
        right = self._right
        for g in self.word(j):
            x = right[g][x]
        return x

    def row(self, i: int) -> Sequence[int]:
        """Left multiplication by i as an index sequence (j -> i*j)."""
        if self._table is not None:
            return self._table[i]
        return [self.mul(i, j) for j in range(self.order)]

    def right_by_generator(self, g: int) -> array:
        return self._right[g]

    def inv(self, i: int) -> int:
        if self._inv is None:
            inv = [0] * self.order
            for j in range(self.order):
                x = 0
                for g in reversed(self.word(j)):
                    x = self._right_inv[g][x]
                inv[j] = x
            self._inv = inv
        return self._inv[i]

    def pow(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inv(i), -k
        result, base = 0, i
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            k += 1
        return k

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def commutator(self, a: int, b: int) -> int:
        """a^-1 b^-1 a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    # ----- subsets -----

    def closure(self, gens: Sequence[int], stop_above: Optional[int] = None) -> List[int]:
        """
        Subgroup generated by `gens` as a sorted index list.

        With stop_above set, returns the whole group as soon as more than
        that many elements are found (Lagrange then forces the full group
        when stop_above = |G|/2).
        """
        found = {0}
        frontier = [0]
        gens = [g for g in gens if g != 0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in found:
                        found.add(y)
                        nxt.append(y)
            if stop_above is not None and len(found) > stop_above:
                return list(range(self.order))
            frontier = nxt
        return sorted(found)

    def generates(self, gens: Sequence[int]) -> bool:
        return len(self.closure(gens, stop_above=self.order // 2)) == self.order

    def element(self, i: int) -> Any:
        return self.elements[i]

    def index_of(self, element: Any) -> int:
        try:
            return self.index[self.ops.key(element)]
        except KeyError as e:
            raise GroupError(f"element not in {self.name}") from e

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupModel({self.name!r}, order={self.order})"


def generate_group(
    generators: Sequence[Any],
    ops: Any,
    expected_order: Optional[int] = None,
    name: str = "",
    cap: int = CLOSURE_CAP,
) -> GroupModel:
    """
    Enumerate the group generated by `generators` breadth-first.

    Args:
        generators: Elements in the representation handled by `ops`
        ops: Element arithmetic
        expected_order: If given, the closure must have exactly this size
        name: Display name
        cap: Maximum closure size

    Returns:
        The materialized GroupModel

    Raises:
        CapExceeded: closure grows past `cap`
        GroupError: closure size differs from expected_order
    """
    start = time.time()
    gens = [ops.validate(g) for g in generators]
    identity = ops.identity()
    elements: List[Any] = [identity]
    index: Dict[Hashable, int] = {ops.key(identity): 0}
    parent = [0]
    parent_gen = [0]
    right_lists: List[List[int]] = [[] for _ in gens]

    queue = deque([0])
    while queue:
        i = queue.popleft()
        x = elements[i]
        for k, g in enumerate(gens):
            y = ops.mul(x, g)
            key = ops.key(y)
            j = index.get(key)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded(f"closure of {name or 'group'} exceeds {cap} elements")
                index[key] = j
                elements.append(y)
                parent.append(i)
                parent_gen.append(k)
                queue.append(j)
            right_lists[k].append(j)
    # right_lists[k] was filled in dequeue order, which is index order
    n = len(elements)
    if expected_order is not None and n != expected_order:
        raise GroupError(f"{name or 'group'}: generators give order {n}, expected {expected_order}")
    typecode = "H" if n < 65536 else "I"
    right = [array(typecode, r) for r in right_lists]
    model = GroupModel(
        name=name,
        ops=ops,
        generators=gens,
        elements=elements,
        index=index,
        right=right,
        parent=array(typecode, parent),
        parent_gen=array("B", parent_gen),
    )
    logger.info(f"✅ generated {name or 'group'} of order {n} in {time.time() - start:.2f}s")
    return model
