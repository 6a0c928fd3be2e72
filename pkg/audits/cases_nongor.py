"""
Case analyses for non-Gorenstein real Fano 3-folds with a Klein group action.
"""

from audits.base import AuditCase
from audits.common import KLEIN, subset_sums, table
from audits.registry import register
from characters import realdim
from orbifold import (
    admissible_gorenstein_genera,
    enumerate_empty_anticanonical,
    enumerate_sigma_configs,
    kb_bound,
    kb_bound_length,
    load_fano_table,
    max_sing_bound,
    sigma_table,
    sing_bound,
)


@register
class NongorSingBound(AuditCase):
    case_id = "nongor.sing-bound"
    anchor = "Singular points of the anticanonical model"
    quote = "|\\mathrm{Sing}(X_{\\CC})|\\leqslant 20+h^{1,2}\\big(V\\big)-\\rho\\big(V\\big)"
    expected = {"admissible_genera": [6, 10, 11, 12], "g8_rho1": 24, "max_bound": 29}

    def evaluate(self):
        fano = load_fano_table()
        self.assert_data(f"smooth Fano 3-fold families from {fano.source}", len(fano))
        genera = self.computed("genera whose smoothing allows 21 singular points", admissible_gorenstein_genera(fano))
        return {
            "admissible_genera": genera,
            "g8_rho1": sing_bound(8, fano, rho=1),
            "max_bound": max_sing_bound(fano),
        }


@register
class NongorDim5(AuditCase):
    case_id = "nongor.dim-5"
    anchor = "Non-Gorenstein case, dimension of the anticanonical system"
    quote = "One has $\\dim(|-K_{X}|)\\geqslant 5$"
    expected = {"min_h0": 6, "min_dim": 5, "min_real_nontrivial": 6}

    def evaluate(self):
        T = table(KLEIN)
        real_dims, seen = [], set()
        for i in range(1, T.class_count):
            chi = T.character(i)
            if chi.conjugate() in seen:
                continue
            seen.add(chi)
            real_dims.append(realdim(T, i))
        self.computed("dimensions of nontrivial irreducible real representations", sorted(real_dims))
        self.out_of_scope("H^0(-K) has at least two sections and at most one trivial summand")
        sums = subset_sums(real_dims)
        min_h0 = min(t + s for t in (0, 1) for s in sums if s > 0 and t + s >= 2)
        return {"min_h0": min_h0, "min_dim": min_h0 - 1, "min_real_nontrivial": min(real_dims)}


@register
class NongorKbBound(AuditCase):
    case_id = "nongor.kb-bound"
    anchor = "Kawamata-Bogomolov bound"
    quote = "<24"
    expected = {"admitted_lengths": [2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15], "bound_length": 16}

    def evaluate(self):
        configs = enumerate_sigma_configs()
        for config in configs:
            self.computed(f"{config.row}, |Sigma| = {config.size}: sum(r - 1/r) = {kb_bound(config)}", str(kb_bound(config)))
        sizes = sorted({c.size for c in configs})
        return {"admitted_lengths": sizes, "bound_length": kb_bound_length()}


@register
class NongorTab0(AuditCase):
    case_id = "nongor.tab0"
    anchor = "Orbit decompositions of the non-Gorenstein locus"
    quote = "It follows from \\eqref{eq:KB} that $|\\Sigma|<16$"
    expected = {
        "moderate-7": [7],
        "fixed-pairs": [2, 4, 6, 8, 10, 12, 14],
        "fixed-pairs+real-7": [7, 9, 11, 13, 15],
        "two-real-7": [14],
        "conjugate-7-pair": [14],
        "orbit-14": [14],
    }

    def evaluate(self):
        self.assert_data("the stabilizer C7:C3 of an 8-point orbit fixes no index-2 terminal point", 8)
        return sigma_table()


@register
class NongorTab(AuditCase):
    case_id = "nongor.tab"
    anchor = "Numerical cases with empty anticanonical system"
    quote = "$13$ cyclic quotient singularities of type $\\frac{1}{2}(1,1,1)$"
    expected = [
        ["1/2", 13, "13x1/2(1,1,1)", 2],
        ["1", 14, "7 moderate aw2", 3],
        ["1", 14, "14x1/2(1,1,1)", 3],
        ["3/2", 15, "15x1/2(1,1,1)", 4],
    ]

    def evaluate(self):
        rows = enumerate_empty_anticanonical()
        return [[str(r.K3), r.basket_length, r.description, r.dim_minus_2k] for r in rows]
