"""
Case analyses for Gorenstein real Fano 3-folds with a Klein group action.

Most cases are degree bookkeeping on a G-orbit of surfaces: N components
of degree deg(E) summing to a multiple of (-K)^3, with N bounded by the
group order.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, List

from sympy import divisors

from audits.base import AuditCase
from audits.common import KLEIN, classes, first_of_degree, group, invariant_rank, lattice, table
from audits.registry import register
from audits.systems import conic_intersection, forced_divisor
from characters import min_nontrivial_rational_dim, molien_dim
from groups import doubly_transitive_sizes, transitive_action_sizes

logger = logging.getLogger(__name__)

KLEIN_ORDER = 168
# G together with complex conjugation
REAL_GROUP_ORDER = 2 * KLEIN_ORDER
MAX_K3 = 64
COMPONENT_BOUND = 18
K3_SELF_INTERSECTION = -2
LINES_DEGREE = 54
DEL_PEZZO_DEGREES = (1, 2, 3, 4, 5, 6, 7, 8, 9)


def class_rank_bound() -> int:
    """-K spans the invariant line; the rest of Cl carries a nontrivial rational representation."""
    return 1 + min_nontrivial_rational_dim(table(KLEIN))


@register
class GorClassRank(AuditCase):
    case_id = "gor.class-rank"
    anchor = "Genus 6, action on the class group"
    quote = "the rank of the group $\\mathrm{Cl}(X_{\\CC})$ is at least $7$"
    expected = {"min_nontrivial_rational_dim": 6, "rank_bound": 7}

    def evaluate(self):
        self.assert_data("Schur indices of PSL(2,7) irreducibles are 1")
        dim = self.computed("smallest nontrivial rational representation", min_nontrivial_rational_dim(table(KLEIN)))
        return {"min_nontrivial_rational_dim": dim, "rank_bound": 1 + dim}


@register
class G789Integrality(AuditCase):
    case_id = "g789.integrality"
    anchor = "Genus 7, 8 and 9"
    quote = "$C_1\\cdot C_2=\\frac{2}{3}$"
    expected = {
        "surface_cases": [[8, 7], [9, 8]],
        "curve_cases": [[8, 7], [8, 14], [9, 8]],
        "conic_products": {"8,7": "2/3", "9,8": "4/7"},
        "line_sum": 3,
        "multiples": [[9, 2, 4], [10, 3, 2]],
    }

    def evaluate(self):
        G, lat = group(KLEIN), list(lattice(KLEIN))
        sizes = self.computed(f"transitive action sizes <= {COMPONENT_BOUND}", transitive_action_sizes(G, COMPONENT_BOUND, lat))
        doubly = doubly_transitive_sizes(G, COMPONENT_BOUND, lat)

        pairs = [(g, m) for g in range(6, 11) for m in sizes if (2 * g - 2) % m == 0]
        surface_cases = [[g, m] for g, m in pairs if (2 * g - 2) // m >= 2]
        curve_cases = [[g, m] for g, m in pairs if (2 * g - 2) // m in (1, 2)]

        conic_products = {}
        for g, m in curve_cases:
            if m in doubly:
                x = conic_intersection(g, m)
                conic_products[(g, m)] = str(x)
                self.computed(f"g={g}, m={m}: conics meet pairwise in {x}, not an integer", str(x))

        line_sum = None
        for g, m in curve_cases:
            if (2 * g - 2) // m == 1:
                line_sum = (2 * g - 2) // m - K3_SELF_INTERSECTION
                self.computed(f"g={g}, m={m}: lines, each meeting the others {line_sum} times", line_sum)

        multiples = []
        for g in range(6, 11):
            for n in range(2, 2 * g):
                if (2 * g - 2) % (n * n) == 0:
                    L2 = (2 * g - 2) // (n * n)
                    if L2 % 2 == 0:
                        multiples.append([g, n, L2])
        self.computed("(g, n, L^2) with n^2 L^2 = 2g - 2, n >= 2 and L^2 even", multiples)
        for g, n, L2 in multiples:
            self.out_of_scope(f"g={g}: the hyperplane section is {n} times a class of square {L2}", [g, n, L2])
        return {
            "surface_cases": surface_cases,
            "curve_cases": curve_cases,
            "conic_products": conic_products,
            "line_sum": line_sum,
            "multiples": multiples,
        }


@register
class G10PlaneDivisibility(AuditCase):
    case_id = "g10.plane-divisibility"
    anchor = "Genus 10, surfaces of small degree"
    quote = "$\\deg(E)$ is divisible by $3$"
    expected = {"divisor": 3}

    def evaluate(self):
        counts = divisors(REAL_GROUP_ORDER)
        return {"divisor": forced_divisor(18, counts)}


@register
class G12Divisibility(AuditCase):
    case_id = "g12.divisibility"
    anchor = "Genus 12"
    quote = "$(-K_X)^2\\cdot E$ is divisible by $11$"
    expected = {"divisor": 11}

    def evaluate(self):
        divisor = forced_divisor(22, divisors(KLEIN_ORDER))
        self.out_of_scope("the Hilbert scheme of conics is P^2 with a faithful G-action, which has no real form")
        return {"divisor": divisor}


@register
class G6PlaneDivisibility(AuditCase):
    case_id = "g6.plane-divisibility"
    anchor = "Genus 6, surfaces of small degree"
    quote = "$\\deg(E)$ is divisible by $5$"
    expected = {"divisor": 5, "invariant_min_degree": 10}

    def evaluate(self):
        divisor = forced_divisor(10, divisors(REAL_GROUP_ORDER))
        # an invariant real E has N = 1; a non-real one has N = 2 and a != 1
        invariant = min(forced_divisor(10, [1]), 2 * forced_divisor(10, [2]))
        self.out_of_scope("|-K| has no G-invariant member, so an invariant non-real E has a >= 2")
        return {"divisor": divisor, "invariant_min_degree": invariant}


@register
class G6GammaEndgame(AuditCase):
    case_id = "g6.gamma-endgame"
    anchor = "Genus 6, final contradiction"
    quote = "which is absurd"
    expected = {"forced_divisor": 10, "solutions_deg5": []}

    def evaluate(self):
        T, cls = table(KLEIN), classes(KLEIN)
        gamma = [c for c in lattice(KLEIN) if c.order == 21][0]
        v6 = T.character(first_of_degree(T, 6))
        v3, v3bar = (T.character(i) for i in T.indices_of_degree(3))
        for label, chi in (("V1+V6", T.trivial() + v6), ("V1+V3+V3bar", T.trivial() + v3 + v3bar)):
            self.computed(f"invariant rank of {label} on {gamma.name}", invariant_rank(chi, cls, gamma.elements))
        counts = divisors(gamma.order)
        divisor = forced_divisor(10, counts)
        solutions = [[n, a] for n in counts for a in range(1, n + 1) if n * 5 == 10 * a]
        return {"forced_divisor": divisor, "solutions_deg5": solutions}


@register
class G6MmpCount(AuditCase):
    case_id = "g6.mmp-count"
    anchor = "Genus 6, the MMP on a factorialization"
    quote = "n=6$, $\\rho(\\widetilde{X})=7"
    expected = {"n": 6, "rho": 7, "degrees": [5, 5, 5, 5, 5, 5]}

    def evaluate(self):
        rank = self.computed("rank of Cl is at least", class_rank_bound())
        found = []
        n = rank - 1
        while 10 + 8 * n <= MAX_K3:
            for degs in itertools.combinations_with_replacement(range(5, MAX_K3 + 1, 5), n):
                if 10 + sum(2 * d - 2 for d in degs) <= MAX_K3:
                    found.append((n, list(degs)))
            n += 1
        self.computed("(n, degrees) with 10 + sum(2 deg - 2) <= 64", found)
        n, degrees = found[0]
        return {"n": n, "rho": n + 1, "degrees": degrees}


@register
class G6DelPezzoDegree(AuditCase):
    case_id = "g6.delpezzo-degree"
    anchor = "Genus 6, del Pezzo fibrations"
    quote = "(-K_F)^2=(-K_{\\widetilde{X}_{\\CC}})^2\\cdot F\\geqslant 10"
    expected = []

    def evaluate(self):
        rank = class_rank_bound()
        multiples = self.computed("del Pezzo degrees divisible by 5", [d for d in DEL_PEZZO_DEGREES if d % 5 == 0])
        survivors = []
        for d in multiples:
            rho = 1 + (10 - d)
            if rho < rank:
                self.computed(f"degree {d}: rho <= rho(F) + 1 = {rho} < {rank}", [d, rho])
                continue
            survivors.append(d)
        return survivors


@register
class G10LinesA(AuditCase):
    case_id = "g10.lines-a"
    anchor = "Genus 10, the surface swept by lines"
    quote = "a\\in\\{2,3\\}"
    expected = {"a_values": [2, 3], "k_lines": 4, "a_from_k": 3}

    def evaluate(self):
        bounded = self.computed("18a <= 54", [a for a in range(1, LINES_DEGREE + 1) if 18 * a <= LINES_DEGREE])
        self.out_of_scope("|-K| has no G-invariant divisor, so a != 1")
        a_values = [a for a in bounded if a >= 2]
        k = self.assert_data("a general line meets 4 other lines", 4)
        return {"a_values": a_values, "k_lines": k, "a_from_k": k - 1}


@register
class G10ConicBundle(AuditCase):
    case_id = "g10.conic-bundle"
    anchor = "Genus 10, conic bundle over P^2"
    quote = "d=12-9\\lambda"
    expected = [[3, 1]]

    def evaluate(self):
        T = table(KLEIN)
        solutions = [[d, lam] for lam in range(1, 3) for d in range(0, 13) if 2 * (12 - d) == 18 * lam]
        self.computed("(d, lambda) with 2(12 - d) = 18 lambda", solutions)
        v3 = T.character(first_of_degree(T, 3))
        self.computed("invariant cubics on P^2", molien_dim(v3, 3))
        return solutions


@register
class G10BirationalBound(AuditCase):
    case_id = "g10.birational-bound"
    anchor = "Genus 10, birational contractions"
    quote = "\\geqslant 70"
    expected = {"N": 2, "deg": 27, "lower_bound": 70, "upper_bound": 64, "contradiction": True}

    def evaluate(self):
        sizes = transitive_action_sizes(group(KLEIN), LINES_DEGREE, list(lattice(KLEIN)))
        allowed = {1, 2} | set(sizes) | {2 * s for s in sizes}
        counts = self.computed("component counts N dividing 54", sorted(set(divisors(LINES_DEGREE)) & allowed))
        if 1 in counts:
            self.out_of_scope("N = 1 gives E ~ 3(-K), impossible for -K nef and big")
            counts.remove(1)
        N = counts[0]
        deg = LINES_DEGREE // N
        lower = 18 + 2 * deg - 2
        return {"N": N, "deg": deg, "lower_bound": lower, "upper_bound": MAX_K3, "contradiction": lower > MAX_K3}
