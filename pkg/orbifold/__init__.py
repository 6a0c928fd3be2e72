"""
Orbifold Riemann-Roch and the non-Gorenstein case enumerations.
"""

from orbifold.basket import Basket, BasketPoint, FanoNumerics
from orbifold.rr import (
    local_contribution,
    rr_chi,
    kc2_from_basket,
    bm_filter,
    dim_anticanonical,
    dim_minus_2k,
    index2_dims,
    kc2_inequality,
)
from orbifold.enumerate import (
    SigmaConfig,
    AnticanonicalRow,
    kb_bound,
    kb_bound_length,
    enumerate_sigma_configs,
    sigma_table,
    enumerate_empty_anticanonical,
)
from orbifold.fano_table import (
    FanoFamily,
    FanoTable,
    load_fano_table,
    parse_fano_table,
    sing_bound,
    admissible_gorenstein_genera,
    max_sing_bound,
)

__all__ = [
    "Basket",
    "BasketPoint",
    "FanoNumerics",
    "local_contribution",
    "rr_chi",
    "kc2_from_basket",
    "bm_filter",
    "dim_anticanonical",
    "dim_minus_2k",
    "index2_dims",
    "kc2_inequality",
    "SigmaConfig",
    "AnticanonicalRow",
    "kb_bound",
    "kb_bound_length",
    "enumerate_sigma_configs",
    "sigma_table",
    "enumerate_empty_anticanonical",
    "FanoFamily",
    "FanoTable",
    "load_fano_table",
    "parse_fano_table",
    "sing_bound",
    "admissible_gorenstein_genera",
    "max_sing_bound",
]
