"""
Invariant polynomials of a matrix group by Reynolds averaging over F_p.

The representation is reduced modulo a prime p = 1 (mod conductor) that
does not divide the group order, so invariant dimensions agree with
characteristic zero. The sum over G is split as a sum over the monomial
subgroup H (cheap: monomials go to scalar multiples of monomials)
followed by a right transversal T, since sum_g f.g = sum_t (sum_h f.h).t.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import MAX_MONOMIALS
from errors import CapExceeded
from exact.linalg import matmul_mod, rank_mod, row_space_mod
from exact.mpoly import Monomial, MPoly, monomials_of_degree
from invariants.action import coordinates_mod, operator_matrix_mod
from invariants.reps import MatrixRep, reduce_mod, reduction_prime

logger = logging.getLogger(__name__)


def variables_for(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass
class InvariantSpace:
    """Degree-d invariants of a representation, as F_p row vectors in rref."""

    rep_name: str
    degree: int
    p: int
    variables: Tuple[str, ...]
    monomials: List[Monomial]
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def polys(self) -> List[MPoly]:
        """Basis polynomials with coefficients in 0..p-1."""
        out = []
        for row in self.basis:
            terms = {self.monomials[j]: int(v) for j, v in enumerate(row) if v}
            out.append(MPoly(self.variables, terms))
        return out

    def rank_of(self, polys: Sequence[MPoly]) -> int:
        """Rank over F_p of integer polynomials of this degree."""
        if not polys:
            return 0
        rows = np.array([coordinates_mod(f, self.monomials, self.p) for f in polys], dtype=np.int64)
        return rank_mod(rows, self.p)

    def contains(self, f: MPoly) -> bool:
        """Whether the reduction of an integer polynomial lies in the space."""
        row = np.array([coordinates_mod(f, self.monomials, self.p)], dtype=np.int64)
        if self.dim == 0:
            return not row.any()
        return rank_mod(np.vstack([self.basis, row]), self.p) == self.dim


def reynolds(
    R: MatrixRep,
    d: int,
    p: Optional[int] = None,
    max_monomials: int = MAX_MONOMIALS,
) -> InvariantSpace:
    """
    Basis of the degree-d invariants of R over F_p.

    Args:
        R: Matrix representation (its closure is materialized)
        d: Degree
        p: Prime, default the smallest p = 1 mod conductor above |G|
        max_monomials: Cap on the monomial count

    Raises:
        CapExceeded: more than max_monomials monomials of degree d
    """
    start = time.time()
    n = R.degree
    variables = variables_for(n)
    monos = monomials_of_degree(n, d)
    if len(monos) > max_monomials:
        raise CapExceeded(f"{len(monos)} monomials of degree {d} exceed {max_monomials}", undecided=[(R.name, d)])
    p = p or reduction_prime(R.conductor, R.expected_order)
    if d == 0:
        return InvariantSpace(R.name, 0, p, variables, monos, np.ones((1, 1), dtype=np.int64))

    G = R.group()
    H = R.monomial_elements()
    T = R.right_transversal(H)
    N = len(monos)
    avg_h = np.zeros((N, N), dtype=np.int64)
    for h in H:
        avg_h = (avg_h + operator_matrix_mod(reduce_mod(R.matrix(h), p, R.conductor), monos, variables, p)) % p
    avg_t = np.zeros((N, N), dtype=np.int64)
    for t in T:
        avg_t = (avg_t + operator_matrix_mod(reduce_mod(R.matrix(t), p, R.conductor), monos, variables, p)) % p
    basis = row_space_mod(matmul_mod(avg_h, avg_t, p), p)
    logger.info(
        f"✅ Reynolds {R.name} degree {d}: dim {basis.shape[0]} over F_{p} "
        f"(|G|={G.order}, |H|={len(H)}, {N} monomials, {time.time() - start:.2f}s)"
    )
    return InvariantSpace(R.name, d, p, variables, monos, basis)


def invariant_dimensions(R: MatrixRep, d_max: int, p: Optional[int] = None) -> List[int]:
    return [reynolds(R, d, p).dim for d in range(d_max + 1)]
