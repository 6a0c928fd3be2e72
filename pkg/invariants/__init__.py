"""
Invariant theory of the Klein group and of SL(2,7) on C^4.
"""

from invariants.reps import MatrixRep, klein_rep, u4_rep, reduce_mod, reduction_prime
from invariants.action import act_on_poly
from invariants.reynolds import InvariantSpace, reynolds, invariant_dimensions
from invariants.covariants import (
    hessian,
    bordered_hessian,
    jacobian_det,
    klein_quartic,
    klein_covariants,
    KleinCovariants,
)
from invariants.smoothness import SmoothnessCertificate, smoothness_certificate, certify_smooth

__all__ = [
    "MatrixRep",
    "klein_rep",
    "u4_rep",
    "reduce_mod",
    "reduction_prime",
    "act_on_poly",
    "InvariantSpace",
    "reynolds",
    "invariant_dimensions",
    "hessian",
    "bordered_hessian",
    "jacobian_det",
    "klein_quartic",
    "klein_covariants",
    "KleinCovariants",
    "SmoothnessCertificate",
    "smoothness_certificate",
    "certify_smooth",
]
