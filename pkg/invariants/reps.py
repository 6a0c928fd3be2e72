"""
Explicit matrix representations over Q(zeta_7).

klein_rep() is the 3-dimensional representation of PSL(2,7) in the
coordinates where x1*x2^3 + x2*x3^3 + x3*x1^3 is invariant; u4_rep() is
the even half of the Weil representation of SL(2,7). Both are checked by
closing the generators (orders 168 and 336) and matching traces against
a character row.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, List, Optional, Sequence

import numpy as np
from sympy import isprime, primitive_root

from characters.table import CharacterTable
from errors import ArithmeticDomainError, GroupError
from exact.cyclotomic import CycloNum, as_cyclo
from groups.classes import ConjClassData, conjugacy_data
from groups.elements import CycloMatrixOps, rows_of, trace_of
from groups.model import GroupModel, generate_group

logger = logging.getLogger(__name__)

Matrix = List[List[CycloNum]]


@dataclass
class MatrixRep:
    """
    Generator images of a linear representation.

    Attributes:
        name: Display name
        degree: Matrix size
        conductor: Entries live in Q(zeta_conductor)
        generators: d x d matrices (row lists)
        expected_order: Order of the closure of the generators
    """

    name: str
    degree: int
    conductor: int
    generators: List[Matrix]
    expected_order: int
    _group: Optional[GroupModel] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        for M in self.generators:
            if len(M) != self.degree or any(len(r) != self.degree for r in M):
                raise GroupError(f"{self.name}: generator is not {self.degree}x{self.degree}")

    @property
    def ops(self) -> CycloMatrixOps:
        return CycloMatrixOps(self.degree, self.conductor)

    def group(self) -> GroupModel:
        """Closure of the generator images; the order is checked."""
        if self._group is None:
            flat = [[x for row in M for x in row] for M in self.generators]
            self._group = generate_group(flat, self.ops, expected_order=self.expected_order, name=self.name)
        return self._group

    def matrix(self, i: int) -> Matrix:
        """Element i of the closure as a row list."""
        return rows_of(self.group().element(i), self.degree)

    def character(self, classes: Optional[ConjClassData] = None) -> List[CycloNum]:
        """Traces of the class representatives of the closure."""
        G = self.group()
        classes = classes or conjugacy_data(G)
        return [trace_of(G.element(r), self.degree) for r in classes.reps]

    def matching_rows(self, table: CharacterTable, classes: Optional[ConjClassData] = None) -> List[int]:
        """Indices of irreducible rows equal to the trace character (class order of `table` must match)."""
        chi = self.character(classes)
        return [i for i, row in enumerate(table.irreducibles) if all(a == b for a, b in zip(row, chi))]

    def monomial_elements(self) -> List[int]:
        """Closure elements with one nonzero entry per row; they form a subgroup."""
        G = self.group()
        d = self.degree
        out = []
        for i, M in enumerate(G.elements):
            if all(sum(1 for x in M[r * d:(r + 1) * d] if x) == 1 for r in range(d)):
                out.append(i)
        return out

    def right_transversal(self, subgroup: Sequence[int]) -> List[int]:
        """Representatives t with G = union of H*t."""
        G = self.group()
        covered = bytearray(G.order)
        reps = []
        for g in range(G.order):
            if covered[g]:
                continue
            reps.append(g)
            for h in subgroup:
                covered[G.mul(h, g)] = 1
        return reps


# ============ reduction mod p ============

def reduction_prime(conductor: int, above: int) -> int:
    """Smallest prime p = 1 (mod conductor) with p > above."""
    p = (above // conductor) * conductor + 1
    if p <= above:
        p += conductor
    while not isprime(p):
        p += conductor
    return p


def zeta_mod(p: int, conductor: int) -> int:
    """A fixed primitive conductor-th root of unity in F_p."""
    if (p - 1) % conductor:
        raise ArithmeticDomainError(f"F_{p} has no primitive {conductor}-th root of unity")
    return pow(primitive_root(p), (p - 1) // conductor, p)


def reduce_mod(M: Sequence[Sequence[Any]], p: int, conductor: int) -> np.ndarray:
    """Image of a cyclotomic matrix in F_p (zeta -> zeta_mod(p, conductor))."""
    z = zeta_mod(p, conductor)
    out = np.zeros((len(M), len(M[0])), dtype=np.int64)
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            out[i, j] = as_cyclo(x).mod_p(p, z, conductor)
    return out


# ============ bundled representations ============

def _z(k: int) -> CycloNum:
    return CycloNum.zeta(7, k)


def _gauss_sum() -> CycloNum:
    """sum of zeta^(x^2) over F_7, equal to sqrt(-7)."""
    return _z(1) + _z(2) + _z(4) - _z(3) - _z(5) - _z(6)


def _zero() -> CycloNum:
    return CycloNum.rational(0, 7)


def _one() -> CycloNum:
    return CycloNum.rational(1, 7)


@lru_cache(maxsize=1)
def klein_rep() -> MatrixRep:
    """PSL(2,7) on C^3 preserving x1*x2^3 + x2*x3^3 + x3*x1^3."""
    O, I = _zero(), _one()
    diag = [[_z(1), O, O], [O, _z(2), O], [O, O, _z(4)]]
    cycle = [[O, I, O], [O, O, I], [I, O, O]]
    a = _z(1) - _z(6)
    b = _z(2) - _z(5)
    c = _z(4) - _z(3)
    s = _gauss_sum() / 7
    invol = [[s * b, s * a, s * c], [s * a, s * c, s * b], [s * c, s * b, s * a]]
    return MatrixRep(name="PSL(2,7) on C^3", degree=3, conductor=7, generators=[diag, cycle, invol], expected_order=168)


@lru_cache(maxsize=1)
def u4_rep() -> MatrixRep:
    """
    SL(2,7) on the even functions of F_7.

    Basis e0 = delta_0 and f_j = delta_j + delta_-j (j = 1, 2, 3). The
    diagonal generator multiplies delta_x by zeta^(x^2); the second is the
    Fourier transform delta_y -> sum_x zeta^(2xy) delta_x scaled by -1/g.
    """
    O = _zero()
    t = [[_one(), O, O, O], [O, _z(1), O, O], [O, O, _z(4), O], [O, O, O, _z(2)]]
    c = -_gauss_sum().inverse()
    four: Matrix = [[O] * 4 for _ in range(4)]
    four[0][0] = c
    for j in range(1, 4):
        four[j][0] = c
        four[0][j] = c * 2
        for k in range(1, 4):
            four[j][k] = c * (_z(2 * j * k) + _z(-2 * j * k))
    return MatrixRep(name="SL(2,7) on C^4", degree=4, conductor=7, generators=[t, four], expected_order=336)
