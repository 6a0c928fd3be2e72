"""
Representation-theoretic facts about the Klein group and its relatives.
"""

from typing import Dict, List

from audits.base import AuditCase
from audits.common import KLEIN, classes, first_of_degree, group, lattice, sub_multisets, table
from audits.registry import register
from characters import CharacterTable, ClassFunction, degree_split, fs_indicator, min_faithful_dim
from groups import curve_orbit_lengths, doubly_transitive_sizes, subgroup_classes, transitive_action_sizes

SL27 = "SL(2,7)"
GAMMA = "C7:C3"
EXTENSIONS = ("PSL(2,7)", "C7:C9", "(C7:C3)xC3", "C14:C3")
ACTION_BOUND = 42


def quadrics_dim(g: int) -> int:
    """h^0(I_X(2)) for a genus-g Fano 3-fold in P^{g+1}."""
    return (g - 2) * (g - 3) // 2


def reality(T: CharacterTable) -> List[List[int]]:
    return sorted([d, fs_indicator(T, i)] for i, d in enumerate(T.degrees))


@register
class KleinSubgroups(AuditCase):
    case_id = "klein.subgroups"
    anchor = "Klein group, subgroup classes"
    quote = "Conjugacy classes of non-trivial subgroups of $G$ are described as follows"
    expected = [7, 7, 8, 14, 14, 21, 24, 28, 42, 42, 42, 56, 84]

    def evaluate(self):
        subs = subgroup_classes(group(KLEIN), classes=classes(KLEIN))
        self.computed("nontrivial proper subgroup classes", sorted(c.name for c in subs if c.order < 168))
        return sorted(c.index for c in subs if c.order < 168)


@register
class KleinActions(AuditCase):
    case_id = "klein.actions"
    anchor = "Klein group, transitive actions"
    quote = "then the $G$-action on $\\Sigma$ is doubly transitive and primitive"
    expected = {"doubly_transitive": [7, 8], "sizes": [7, 8, 14, 21, 24, 28, 42]}

    def evaluate(self):
        G, lat = group(KLEIN), list(lattice(KLEIN))
        return {
            "doubly_transitive": doubly_transitive_sizes(G, ACTION_BOUND, lat),
            "sizes": transitive_action_sizes(G, ACTION_BOUND, lat),
        }


@register
class KleinCurveOrbits(AuditCase):
    case_id = "klein.curve-orbits"
    anchor = "Klein group, orbits on curves"
    quote = "the $G$-orbits in $C$ are of length $24$, $42$, $56$, $84$ or $168$"
    expected = [24, 42, 56, 84, 168]

    def evaluate(self):
        return curve_orbit_lengths(group(KLEIN), classes(KLEIN))


@register
class KleinCharDegrees(AuditCase):
    case_id = "klein.char-degrees"
    anchor = "Klein group, irreducible representations"
    quote = "The group $G$ has $6$ irreducible complex representations"
    expected = {
        "C7:C3": [1, 1, 1, 3, 3],
        "PSL(2,7)": [1, 3, 3, 6, 7, 8],
        "SL(2,7)": [1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8],
    }

    def evaluate(self):
        return {name: sorted(table(name).degrees) for name in (GAMMA, KLEIN, SL27)}


@register
class KleinReality(AuditCase):
    case_id = "klein.reality"
    anchor = "Klein group and its double cover, real structures"
    quote = "$\\mathbb{U}_8^\\prime$ is a real faithful $8$-dimensional faithful representation"
    expected = {
        "PSL(2,7)": [[1, 1], [3, 0], [3, 0], [6, 1], [7, 1], [8, 1]],
        "SL(2,7)": [[1, 1], [3, 0], [3, 0], [4, 0], [4, 0], [6, 0], [6, 0], [6, 1], [7, 1], [8, -1], [8, 1]],
    }

    def evaluate(self):
        return {name: self.computed(f"(degree, indicator) for {name}", reality(table(name))) for name in (KLEIN, SL27)}


@register
class KleinMinFaithful(AuditCase):
    case_id = "klein.min-faithful"
    anchor = "Groups of order 42 and 63 with a C7:C3 quotient"
    quote = "any faithful real representation of the group $\\Gamma^\\prime$ has dimension $\\geqslant 6$"
    expected = {name: [3, 6] for name in EXTENSIONS}

    def evaluate(self):
        out = {}
        for name in EXTENSIONS:
            T = table(name)
            out[name] = [min_faithful_dim(T, "complex"), min_faithful_dim(T, "real")]
        return out


@register
class KleinProjective(AuditCase):
    case_id = "klein.projective"
    anchor = "Klein group, projective representations"
    quote = "If $n\\in\\{2,3,4,5\\}$, then $\\mathrm{PGL}_n(\\mathbb{R})$ has no"
    expected = {"psl_min_complex": 3, "psl_min_real": 6, "sl_faithful_min_degree": 4, "sl_min_real": 8}

    def evaluate(self):
        self.out_of_scope("projective representations are checked only through their linear lifts")
        psl, sl = table(KLEIN), table(SL27)
        return {
            "psl_min_complex": min_faithful_dim(psl, "complex"),
            "psl_min_real": min_faithful_dim(psl, "real"),
            "sl_faithful_min_degree": min_faithful_dim(sl, "complex"),
            "sl_min_real": min_faithful_dim(sl, "real"),
        }


@register
class KleinQuadricsDim(AuditCase):
    case_id = "klein.quadrics-dim"
    anchor = "Anticanonical models, quadrics through X"
    quote = "h^0\\big(\\PP^{g+1},\\, \\mathcal{I}_X(2)\\big)=\\frac12 (g-2)(g-3)"
    expected = {"6": 6, "7": 10}

    def evaluate(self):
        return {g: quadrics_dim(g) for g in (6, 7)}


def sym2_candidates(T: CharacterTable, parts: List[int], g: int) -> Dict[str, List]:
    chi = ClassFunction.constant(T, 0)
    for d in parts:
        chi = chi + (T.trivial() if d == 1 else T.character(first_of_degree(T, d)))
    split = degree_split(chi.sym2())
    return {"split": split, "w_candidates": sub_multisets(split, quadrics_dim(g))}


@register
class KleinG7Sym2(AuditCase):
    case_id = "klein.g7-sym2"
    anchor = "Genus 7, the space of quadrics"
    quote = "is invariant and $10$-dimensional"
    expected = {"split": [1, 1, 6, 6, 7, 8, 8, 8], "w_candidates": [[1, 1, 8]]}

    def evaluate(self):
        self.computed("H^0(-K_X) = V1 + V8 for genus 7", [1, 8])
        return sym2_candidates(table(KLEIN), [1, 8], 7)


@register
class KleinG6Sym2(AuditCase):
    case_id = "klein.g6-sym2"
    anchor = "Genus 6, the space of quadrics"
    quote = "and $X$ is an intersection of quadrics in $\\PP^7$"
    expected = {
        "V1+V7": {"split": [1, 1, 6, 6, 7, 7, 8], "w_candidates": [[6]]},
        "V8": {"split": [1, 6, 6, 7, 8, 8], "w_candidates": [[6]]},
    }

    def evaluate(self):
        T = table(KLEIN)
        self.out_of_scope("H^0(-K_X) is V1 + V7 or V8: at most one invariant anticanonical surface")
        return {"V1+V7": sym2_candidates(T, [1, 7], 6), "V8": sym2_candidates(T, [8], 6)}
