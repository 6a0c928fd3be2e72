"""
Case analyses for SL(2,8) acting on its genus-7 Fano 3-fold in P^8.

H^0(O(2)) on P^8 is Sym^2 of the 9-dimensional representation. Removing
the 10 quadrics through X leaves H^0(-2K_X), and q runs over the
dimensions of its subrepresentations.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

from audits.base import AuditCase
from audits.common import classes, first_of_degree, group, lattice, remove_parts, sub_multisets, subset_sums, table
from audits.registry import register
from characters import degree_split
from groups import genus_spectrum, min_orbit_length, transitive_action_sizes

logger = logging.getLogger(__name__)

SL28 = "SL(2,8)"
H0_MINUS_2K = 35
QUADRICS_DIM = 10
# lambda < 2.001 gives (lambda - 1) d < 1.001 d
LC_SLOPE = Fraction(1001, 1000)
LMFDB_GENUS_BOUND = 12


@lru_cache(maxsize=1)
def sym2_data() -> Dict[str, List]:
    T = table(SL28)
    chi = T.character(first_of_degree(T, 9))
    split = degree_split(chi.sym2())
    quadrics = sub_multisets(split, QUADRICS_DIM)
    rest = remove_parts(split, quadrics[0]) if len(quadrics) == 1 else []
    q_values = [q for q in subset_sums(rest) if q < H0_MINUS_2K]
    return {"split": split, "quadrics": quadrics, "q_values": q_values}


def orbit_sizes(bound: int = H0_MINUS_2K) -> List[int]:
    G = group(SL28)
    return transitive_action_sizes(G, bound, list(lattice(SL28)))


@register
class SL28Sym2Split(AuditCase):
    case_id = "sl28.sym2-split"
    anchor = "SL(2,8) section, anticanonical model in P^8"
    quote = "splits as a sum of one trivial $1$-dimensional representation, one irreducible $8$-dimensional representation, and four irreducible $9$-dimensional representations"
    expected = {"q_values": [0, 8, 9, 17, 18, 26, 27], "quadrics": [[1, 9]], "split": [1, 8, 9, 9, 9, 9]}

    def evaluate(self):
        data = sym2_data()
        self.computed("Sym^2 of the 9-dimensional irreducible", data["split"])
        self.assert_data("h^0(I_X(2)) = 10 by projective normality", QUADRICS_DIM)
        self.computed("10-dimensional sub-sums of Sym^2", data["quadrics"])
        self.computed("dimensions of subrepresentations of H^0(-2K_X) below 35", data["q_values"])
        return data


@register
class SL28OrbitLengths(AuditCase):
    case_id = "sl28.orbit-lengths"
    anchor = "SL(2,8) section, orbits of length at most 35"
    quote = "either $n=9$ or $n=28$"
    expected = [9, 28]

    def evaluate(self):
        return self.computed("subgroup indices <= 35", orbit_sizes())


@register
class SL28GenusSpectrum(AuditCase):
    case_id = "sl28.genus-spectrum"
    anchor = "SL(2,8) section, faithful actions on curves"
    quote = "$G$ cannot act faithfully on a smooth curve of genus less then $7$"
    expected = [7, 15]

    def evaluate(self):
        return self.computed("genera <= 15 with a generating vector", genus_spectrum(group(SL28), 15, classes=classes(SL28)))


@register
class SL28PointCase(AuditCase):
    case_id = "sl28.point-case"
    anchor = "SL(2,8) section, corollary on point centers"
    quote = "so $Z$ is a $G$-orbit of length $28$. This gives $q=7$, which is a contradiction"
    expected = []

    def evaluate(self):
        Q = sym2_data()["q_values"]
        lengths = [1] + orbit_sizes()
        self.assert_data("G fixes no point of X", 1)
        survivors = [m for m in lengths if m > 1 and H0_MINUS_2K - m in Q]
        self.computed("orbit lengths m <= 35 with 35 - m among the q values", survivors)
        if 9 in survivors:
            self.assert_data("the stabilizer of a 9-point orbit contains C2^3, which fixes no point of X", 9)
            survivors.remove(9)
        if 28 in orbit_sizes():
            self.computed("orbit of length 28 needs q = 7", H0_MINUS_2K - 28)
        return survivors


@register
class SL28LowGenus(AuditCase):
    case_id = "sl28.low-genus"
    anchor = "SL(2,8) section, lemma on genus 0 and 1"
    quote = "which gives $n=9$, $q=17$ and $d=1$, so that $C$ is a line, which is absurd"
    expected = [[0, 9, 1, 8], [1, 9, 1, 17]]

    def evaluate(self):
        Q = sym2_data()["q_values"]
        spectrum = genus_spectrum(group(SL28), 15, classes=classes(SL28))
        self.computed("smallest genus with a faithful action, so n > 1 for g <= 1", min(spectrum))
        ns = [n for n in orbit_sizes() if n > 1]
        rows = []
        for g in (0, 1):
            for n in ns:
                for d in range(1, H0_MINUS_2K + 1):
                    q = H0_MINUS_2K - n * (2 * d - g + 1)
                    if q in Q:
                        rows.append([g, n, d, q])
        self.computed("(g, n, d, q) with 35 - q = n(2d - g + 1)", rows)
        for g, n, d, q in rows:
            if g == 1 and d == 1:
                self.computed("a curve of degree 1 is a line, of genus 0", [g, d])
            if g == 0:
                self.assert_data("the stabilizer C2^3:C7 of C acts on C through C7; C2^3 fixes no point of X", [g, n])
        return rows


@register
class SL28CurveScan(AuditCase):
    case_id = "sl28.curve-scan"
    anchor = "SL(2,8) section, curve centers of genus at least 2"
    quote = "Then $d=12$ or $d=16$"
    expected = [[7, 12], [7, 16]]

    def evaluate(self):
        Q = sym2_data()["q_values"]
        ns = [1] + orbit_sizes()
        spectrum = genus_spectrum(group(SL28), LMFDB_GENUS_BOUND, classes=classes(SL28))
        self.computed(f"genera <= {LMFDB_GENUS_BOUND} with a faithful action", spectrum)

        survivors = []
        for g in range(2, 2 * H0_MINUS_2K):
            for d in range(1, 2 * H0_MINUS_2K):
                if not LC_SLOPE * d > 2 * g - 2:
                    continue
                if 2 * g > (d - 1) * (d - 2):
                    continue
                for n in ns:
                    q = H0_MINUS_2K - n * (2 * d - g + 1)
                    if q not in Q:
                        continue
                    if n == 1 and g not in spectrum:
                        continue
                    survivors.append((g, d, n, q))
        self.computed("(g, d, n, q) surviving the degree, genus and orbit constraints", survivors)
        result = sorted({(g, d) for g, d, _, _ in survivors})

        for g, d, n, q in survivors:
            bound = d - 6 + 1
            if bound < 9:
                self.computed(f"d={d}: h^0(C, -K_X|C) <= {bound} < 9 = h^0(X, -K_X)", [d, bound])
                continue
            self.assert_data("the genus-7 curve with an SL(2,8)-action is unique up to isomorphism", g)
            shortest = min_orbit_length(group(SL28), g, classes(SL28))
            self.computed(f"d={d}: shortest orbit on the genus-{g} curve is {shortest} > {d}", [d, shortest])
        return [list(r) for r in result]
