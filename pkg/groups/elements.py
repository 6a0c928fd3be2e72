"""
Element arithmetic for permutation and matrix groups.

Every ops object exposes identity(), mul(a, b) and key(a). Products
compose left to right: (a*b) acts as first a, then b. Permutations are
image tuples on 0..m-1; matrices are flat row-major tuples multiplied in
the ordinary way, which is the same composition order for row vectors.
"""

from __future__ import annotations

import operator
from typing import Any, Hashable, List, Sequence, Tuple

from errors import GroupError
from exact.cyclotomic import CycloNum, as_cyclo
from exact.finite_field import GF

Perm = Tuple[int, ...]
FlatMatrix = Tuple[Any, ...]


class PermOps:
    """Permutations of 0..degree-1."""

    kind = "perm"

    def __init__(self, degree: int):
        self.degree = degree

    def identity(self) -> Perm:
        return tuple(range(self.degree))

    def mul(self, a: Perm, b: Perm) -> Perm:
        return tuple([b[i] for i in a])

    def inv(self, a: Perm) -> Perm:
        out = [0] * len(a)
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    def key(self, a: Perm) -> Hashable:
        return a

    def validate(self, a: Sequence[int]) -> Perm:
        a = tuple(int(x) for x in a)
        if len(a) != self.degree or sorted(a) != list(range(self.degree)):
            raise GroupError(f"{list(a)} is not a permutation of 0..{self.degree - 1}")
        return a

    def describe(self) -> str:
        return f"perm {self.degree}"


class PrimeMatrixOps:
    """d x d matrices over F_p with integer entries."""

    kind = "matrix"

    def __init__(self, dim: int, p: int):
        self.dim = dim
        self.p = p

    def identity(self) -> FlatMatrix:
        d = self.dim
        return tuple(1 if i == j else 0 for i in range(d) for j in range(d))

    def mul(self, a: FlatMatrix, b: FlatMatrix) -> FlatMatrix:
        d, p = self.dim, self.p
        cols = [b[j::d] for j in range(d)]
        out = []
        for i in range(d):
            row = a[i * d:(i + 1) * d]
            for col in cols:
                out.append(sum(map(operator.mul, row, col)) % p)
        return tuple(out)

    def key(self, a: FlatMatrix) -> Hashable:
        return a

    def validate(self, a: Sequence[int]) -> FlatMatrix:
        if len(a) != self.dim * self.dim:
            raise GroupError(f"expected {self.dim * self.dim} entries, got {len(a)}")
        return tuple(int(x) % self.p for x in a)

    def describe(self) -> str:
        return f"matrix {self.dim} over F_{self.p}"


class FieldMatrixOps:
    """d x d matrices over an extension field F_{p^k}, entries as encodings."""

    kind = "matrix"

    def __init__(self, dim: int, field: GF):
        self.dim = dim
        self.field = field
        q = field.q
        self._add = [[field.add(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[field.mul(a, b) for b in range(q)] for a in range(q)]

    def identity(self) -> FlatMatrix:
        d = self.dim
        return tuple(1 if i == j else 0 for i in range(d) for j in range(d))

    def mul(self, a: FlatMatrix, b: FlatMatrix) -> FlatMatrix:
        d = self.dim
        add, mul = self._add, self._mul
        out = []
        for i in range(d):
            row = a[i * d:(i + 1) * d]
            for j in range(d):
                acc = 0
                for k in range(d):
                    acc = add[acc][mul[row[k]][b[k * d + j]]]
                out.append(acc)
        return tuple(out)

    def key(self, a: FlatMatrix) -> Hashable:
        return a

    def validate(self, a: Sequence[int]) -> FlatMatrix:
        if len(a) != self.dim * self.dim:
            raise GroupError(f"expected {self.dim * self.dim} entries, got {len(a)}")
        return tuple(int(x) for x in a)

    def describe(self) -> str:
        return f"matrix {self.dim} over F_{self.field.p}^{self.field.k}"


class CycloMatrixOps:
    """d x d matrices over Q(zeta_n) for a fixed conductor n."""

    kind = "matrix"

    def __init__(self, dim: int, conductor: int):
        self.dim = dim
        self.conductor = conductor
        self._zero = CycloNum.rational(0, conductor)
        self._one = CycloNum.rational(1, conductor)

    def _lift(self, x: Any) -> CycloNum:
        x = as_cyclo(x)
        if x.is_rational():
            return CycloNum.rational(x.to_fraction(), self.conductor)
        return x.embed(self.conductor)

    def identity(self) -> FlatMatrix:
        d = self.dim
        return tuple(self._one if i == j else self._zero for i in range(d) for j in range(d))

    def mul(self, a: FlatMatrix, b: FlatMatrix) -> FlatMatrix:
        d = self.dim
        out = []
        for i in range(d):
            row = a[i * d:(i + 1) * d]
            for j in range(d):
                acc = self._zero
                for k in range(d):
                    x, y = row[k], b[k * d + j]
                    if x and y:
                        acc = acc + x * y
                out.append(acc)
        return tuple(out)

    def key(self, a: FlatMatrix) -> Hashable:
        return tuple(x.key() for x in a)

    def validate(self, a: Sequence[Any]) -> FlatMatrix:
        if len(a) != self.dim * self.dim:
            raise GroupError(f"expected {self.dim * self.dim} entries, got {len(a)}")
        return tuple(self._lift(x) for x in a)

    def describe(self) -> str:
        return f"matrix {self.dim} over Q(E({self.conductor}))"


def rows_of(a: FlatMatrix, dim: int) -> List[List[Any]]:
    return [list(a[i * dim:(i + 1) * dim]) for i in range(dim)]


def trace_of(a: FlatMatrix, dim: int) -> Any:
    total = a[0]
    for i in range(1, dim):
        total = total + a[i * dim + i]
    return total
