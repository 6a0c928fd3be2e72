"""
Exact arithmetic: cyclotomic fields, finite fields, sparse polynomials, F_p linear algebra.
"""

from exact.cyclotomic import (
    CycloNum,
    cyclo_canonical,
    galois_conjugate,
    field_degree,
    conductor_of_values,
    class_sum,
    lcm,
    euler_phi,
)
from exact.finite_field import GF, FFElem, get_field, parse_ff
from exact.mpoly import MPoly, matpoly_det, monomials_of_degree, parse_poly, LinearImages
from exact.linalg import rref_mod, rank_mod, nullspace_mod, row_space_mod, matmul_mod

__all__ = [
    "CycloNum",
    "cyclo_canonical",
    "galois_conjugate",
    "field_degree",
    "conductor_of_values",
    "class_sum",
    "lcm",
    "euler_phi",
    "GF",
    "FFElem",
    "get_field",
    "parse_ff",
    "MPoly",
    "matpoly_det",
    "monomials_of_degree",
    "parse_poly",
    "LinearImages",
    "rref_mod",
    "rank_mod",
    "nullspace_mod",
    "row_space_mod",
    "matmul_mod",
]
