"""
Case analyses for A7 and PSp(4,3) acting on P^3 and on the Burkhardt quartic.

Both use H^0(P^3, O(5)) = 20 + 36 as a representation of the relevant
central extension, so a point orbit has 20, 36 or 56 points and a curve
center satisfies 5 deg(C) - g + 1 = 56 - q.
"""

import logging
from fractions import Fraction
from math import comb
from typing import List

from audits.base import AuditCase
from audits.common import classes, first_of_degree, group, lattice, table
from audits.registry import register
from characters import degree_split, sym_power_char
from groups import genus_spectrum, hurwitz_min_genus, subgroup_order_obstruction

logger = logging.getLogger(__name__)

A7 = "A7"
A7_DOUBLE_COVER = "2.A7"
SP43 = "Sp(4,3)"
PSP43_ORDER = 25920
QUINTICS = comb(5 + 3, 3)
Q_VALUES = (0, 20, 36)
LC_SLOPE = Fraction(1001, 1000)
# (-K)^3 of P^3 bounds the degree of a curve center
P3_DEGREE_BOUND = 16
# smallest index of a proper subgroup of PSp(4,3)
PSP43_MIN_INDEX = 27
PSP43_MAXIMAL_INDICES = (27, 36, 40, 40, 45)


def quintic_split(name: str) -> List[int]:
    T = table(name)
    chi = T.character(first_of_degree(T, 4, faithful=True))
    return degree_split(sym_power_char(chi, 5))


def max_curve_genus(degree_bound: int) -> int:
    """Largest g with 2g - 2 <= 4 * 1.001 * degree_bound."""
    g = 0
    while 2 * (g + 1) - 2 <= 4 * LC_SLOPE * degree_bound:
        g += 1
    return g


@register
class A7Sym5Split(AuditCase):
    case_id = "a7.sym5-split"
    anchor = "A7 section, quintics on P^3"
    quote = "splits as a sum of a $20$-dimensional irreducible representation and a $36$-dimensional irreducible representation"
    expected = [20, 36]

    def evaluate(self):
        return self.computed("Sym^5 of a faithful 4-dimensional irreducible of 2.A7", quintic_split(A7_DOUBLE_COVER))


@register
class A7OrbitGap(AuditCase):
    case_id = "a7.orbit-gap"
    anchor = "A7 section, point centers"
    quote = "because $G$ has no subgroups of indices $20$, $36$ or $56$"
    expected = []

    def evaluate(self):
        G = group(A7)
        realized = []
        for q in Q_VALUES:
            index = QUINTICS - q
            reason = subgroup_order_obstruction(G, G.order // index, classes(A7))
            if reason:
                self.computed(f"no subgroup of index {index}: {reason}", index)
                continue
            hits = [H.name for H in lattice(A7) if H.index == index]
            self.computed(f"subgroup classes of index {index} in the lattice", hits)
            if hits:
                realized.append(index)
        return realized


@register
class A7CurveScan(AuditCase):
    case_id = "a7.curve-scan"
    anchor = "A7 section, curve centers"
    quote = "Combining these inequalities, we obtain a contradiction with $g\\geqslant 31$"
    expected = []

    def evaluate(self):
        G = group(A7)
        g_min = self.computed("Hurwitz bound for |A7| = 2520", hurwitz_min_genus(G.order))
        g_cap = max_curve_genus(QUINTICS)
        candidates = []
        for g in range(g_min, g_cap + 1):
            for d in range(1, QUINTICS + 1):
                if not 4 * LC_SLOPE * d > 2 * g - 2:
                    continue
                if 5 * d - g + 1 in {QUINTICS - q for q in Q_VALUES}:
                    candidates.append((d, g))
        self.computed("(d, g) with 5d - g + 1 in {20, 36, 56} and 4.004 d > 2g - 2", candidates)
        spectrum = set(genus_spectrum(G, g_cap, search=False, classes=classes(A7)))
        survivors = [list(c) for c in candidates if c[1] in spectrum]
        for d, g in candidates:
            if g not in spectrum:
                self.computed(f"genus {g} has no A7 signature", [d, g])
        return survivors


@register
class BurkhardtSym5Split(AuditCase):
    case_id = "burkhardt.sym5-split"
    anchor = "PSp(4,3) section, quintics on P^3"
    quote = "is a sum of a $20$-dimensional irreducible representation and a $36$-dimensional irreducible representation of the group $\\widehat{G}$"
    expected = [20, 36]

    def evaluate(self):
        return self.computed("Sym^5 of a faithful 4-dimensional irreducible of Sp(4,3)", quintic_split(SP43))


@register
class BurkhardtDim15(AuditCase):
    case_id = "burkhardt.dim15"
    anchor = "PSp(4,3) section, the Burkhardt quartic"
    quote = "15-h^0\\big(Y,\\mathcal{O}_{Y}(-2K_Y)\\otimes\\mathcal{I}_Z\\big)\\leqslant 15"
    expected = {"h0": 15, "hurwitz_genus": 310, "max_curve_genus": 33, "min_action": 27}

    def evaluate(self):
        h0 = self.computed("h^0(P^4, O(2)) restricted to a quartic", comb(2 + 4, 4))
        hurwitz = self.computed("Hurwitz bound for |PSp(4,3)| = 25920", hurwitz_min_genus(PSP43_ORDER))
        g_max = self.computed("largest genus of a curve center of degree <= 16 in P^3", max_curve_genus(P3_DEGREE_BOUND))
        min_action = self.assert_data("PSp(4,3) acts non-trivially only on sets of >= 27 elements", PSP43_MIN_INDEX)
        self.computed("an orbit of at most 15 points cannot exist", h0 < min_action)
        return {"h0": h0, "hurwitz_genus": hurwitz, "max_curve_genus": g_max, "min_action": min_action}


@register
class BurkhardtP3Scan(AuditCase):
    case_id = "burkhardt.p3-scan"
    anchor = "PSp(4,3) section, point and curve centers on P^3"
    quote = "so $|Z|=36$, since $G$ has no subgroups of indices $20$ or $56$"
    expected = []

    def evaluate(self):
        maximal = self.assert_data("indices of the maximal subgroups of PSp(4,3)", list(PSP43_MAXIMAL_INDICES))
        survivors = []
        for q in Q_VALUES:
            index = QUINTICS - q
            if PSP43_ORDER % index:
                self.computed(f"{index} does not divide 25920", index)
            elif all(m > index for m in maximal):
                self.computed(f"every maximal subgroup has index > {index}", index)
            elif index == 36:
                self.assert_data("the index-36 stabilizer S6 fixes no point of P^3", index)
            else:
                survivors.append(["point", index])
        g_max = max_curve_genus(P3_DEGREE_BOUND)
        hurwitz = hurwitz_min_genus(PSP43_ORDER)
        if g_max >= hurwitz:
            survivors.append(["curve", g_max])
        else:
            self.computed(f"curves of degree <= 16 have genus <= {g_max} < {hurwitz}", [g_max, hurwitz])
        return survivors
