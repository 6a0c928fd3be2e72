"""
Classical covariants of ternary forms and the Klein invariants.

Every covariant is returned in primitive form: integer coefficients with
content 1 and a positive leading coefficient in graded-lex order. The
scalars are recorded so equalities can be stated projectively.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from errors import ArithmeticDomainError
from exact.mpoly import MPoly, matpoly_det, parse_poly

logger = logging.getLogger(__name__)

KLEIN_VARIABLES = ("x1", "x2", "x3")
KLEIN_QUARTIC = "x1*x2^3 + x2*x3^3 + x3*x1^3"


def normalize(f: MPoly) -> Tuple[Fraction, MPoly]:
    """(s, P) with f = s*P and P primitive; the zero polynomial maps to (0, 0)."""
    if f.is_zero():
        return Fraction(0), f
    return f.primitive()


def _require_homogeneous(*polys: MPoly) -> None:
    for f in polys:
        if not f.is_homogeneous() or f.is_zero():
            raise ArithmeticDomainError(f"{f} is not a nonzero homogeneous polynomial")
    for f in polys[1:]:
        if f.variables != polys[0].variables:
            raise ArithmeticDomainError(f"variable mismatch: {f.variables} vs {polys[0].variables}")


def hessian_matrix(f: MPoly) -> List[List[MPoly]]:
    grad = f.gradient()
    return [[g.diff(j) for j in range(f.nvars)] for g in grad]


def hessian(f: MPoly) -> MPoly:
    """Primitive form of det(d^2 f / dx_i dx_j)."""
    _require_homogeneous(f)
    return normalize(matpoly_det(hessian_matrix(f)))[1]


def bordered_hessian(f: MPoly, h: MPoly) -> MPoly:
    """
    Primitive form of det [[Hess f, grad h^T], [grad h, 0]].

    For forms of degrees e and k in three variables the result has degree
    2(e-2) + 2(k-1).
    """
    _require_homogeneous(f, h)
    H = hessian_matrix(f)
    grad = h.gradient()
    zero = MPoly(f.variables)
    M = [row + [grad[i]] for i, row in enumerate(H)]
    M.append(list(grad) + [zero])
    return normalize(matpoly_det(M))[1]


def jacobian_det(*polys: MPoly) -> MPoly:
    """Primitive form of det(d f_i / dx_j) for n forms in n variables."""
    _require_homogeneous(*polys)
    if len(polys) != polys[0].nvars:
        raise ArithmeticDomainError(f"{len(polys)} forms in {polys[0].nvars} variables")
    return normalize(matpoly_det([f.gradient() for f in polys]))[1]


@dataclass
class KleinCovariants:
    """
    phi4 and the covariants built from it.

    Attributes:
        phi4: The Klein quartic
        phi6: Hessian of phi4
        phi14: Bordered Hessian of (phi4, phi6)
        phi21: Jacobian of (phi4, phi6, phi14)
        scales: raw determinant = scale * primitive form, per name
    """

    phi4: MPoly
    phi6: MPoly
    phi14: MPoly
    phi21: MPoly
    scales: Dict[str, Fraction] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, MPoly]:
        return {"phi4": self.phi4, "phi6": self.phi6, "phi14": self.phi14, "phi21": self.phi21}


def klein_quartic() -> MPoly:
    return parse_poly(KLEIN_QUARTIC, KLEIN_VARIABLES)


@lru_cache(maxsize=1)
def klein_covariants() -> KleinCovariants:
    phi4 = klein_quartic()
    s6, phi6 = normalize(matpoly_det(hessian_matrix(phi4)))
    H = hessian_matrix(phi4)
    grad = phi6.gradient()
    bordered = [row + [grad[i]] for i, row in enumerate(H)]
    bordered.append(list(grad) + [MPoly(KLEIN_VARIABLES)])
    s14, phi14 = normalize(matpoly_det(bordered))
    s21, phi21 = normalize(matpoly_det([phi4.gradient(), phi6.gradient(), phi14.gradient()]))
    for name, f in (("phi6", phi6), ("phi14", phi14), ("phi21", phi21)):
        if f.is_zero():
            logger.warning(f"⚠️ {name} vanished identically")
    logger.info(f"✅ Klein covariants: degrees {phi6.degree()}, {phi14.degree()}, {phi21.degree()}")
    return KleinCovariants(phi4, phi6, phi14, phi21, {"phi4": Fraction(1), "phi6": s6, "phi14": s14, "phi21": s21})
