"""
Two-ray link and reduction systems for the non-Gorenstein case.
"""

import math

from audits.base import AuditCase
from audits.registry import register
from audits.systems import (
    LINK_GENERA,
    LINK_N,
    LINK_N_PRIME,
    check_link_solution,
    solve_link_system,
    solve_reduction_system,
)

MAX_FANO_INDEX = 4
REDUCTION_NUMERATOR = 28


@register
class LinkQuadratic(AuditCase):
    case_id = "link.quadratic"
    anchor = "Equivariant Sarkisov link"
    quote = "we get $N=N^\\prime$, $b=1$ and $a=\\frac{N}{g-1}$"
    expected = {
        "solutions": [
            [7, 7, 6, "7/5", "1"],
            [7, 7, 10, "7/9", "1"],
            [7, 7, 11, "7/10", "1"],
            [7, 7, 12, "7/11", "1"],
            [14, 2, 11, "1/3", "1/3"],
            [14, 14, 6, "14/5", "1"],
            [14, 14, 10, "14/9", "1"],
            [14, 14, 11, "7/5", "1"],
            [14, 14, 12, "14/11", "1"],
        ],
        "asserted_exclusions": [[14, 2, 11, "1/3", "1/3"]],
        "endgame": [[7, 6, 5], [7, 10, 9], [7, 11, 10], [7, 12, 11], [14, 6, 5], [14, 10, 9], [14, 11, 5], [14, 12, 11]],
        "max_index": MAX_FANO_INDEX,
    }

    def evaluate(self):
        found = []
        for N in LINK_N:
            for n_prime in LINK_N_PRIME:
                for g in LINK_GENERA:
                    for a, b in solve_link_system(N, n_prime, g):
                        if not check_link_solution(2 * g - 2, N, n_prime, a, b):
                            raise ArithmeticError(f"({N}, {n_prime}, {g}): ({a}, {b}) fails back substitution")
                        found.append((N, n_prime, g, a, b))
        found.sort(key=lambda s: s[:3])
        self.computed("all rational solutions with a > 0 pass back substitution", len(found))

        excluded = [s for s in found if s[4].denominator != 1 or s[4] <= 0]
        for N, n_prime, g, a, b in excluded:
            self.assert_data(f"({N}, {n_prime}, {g}): b = {b} is not a positive integer", [N, n_prime, g])

        endgame = []
        for N, n_prime, g, a, b in found:
            if (N, n_prime, g, a, b) in excluded:
                continue
            divisor = (g - 1) // math.gcd(N, g - 1)
            endgame.append([N, g, divisor])
            self.computed(f"N={N}, g={g}: -K divisible by {divisor} > {MAX_FANO_INDEX}", divisor)
        self.assert_data("Fano index of a Gorenstein Fano 3-fold is at most 4", MAX_FANO_INDEX)

        def row(s):
            N, n_prime, g, a, b = s
            return [N, n_prime, g, str(a), str(b)]

        return {
            "solutions": [row(s) for s in found],
            "asserted_exclusions": [row(s) for s in excluded],
            "endgame": endgame,
            "max_index": MAX_FANO_INDEX,
        }


@register
class LinkReduction(AuditCase):
    case_id = "link.reduction"
    anchor = "Reduction to orbits of length 7"
    quote = "$a=\\frac{28}{4g+3}$"
    expected = {
        "solutions": [[6, "28/27", "1", 7], [10, "28/43", "1", 7], [11, "28/47", "1", 7], [12, "28/51", "1", 7]],
        "gcd_one": True,
        "min_divisor": 27,
    }

    def evaluate(self):
        rows, divisors = [], []
        for g in LINK_GENERA:
            result = solve_reduction_system(g)
            self.computed(f"g={g}: every solution forces 2K divisible by {result.divisor}", result.contradiction)
            for a, b, n_prime in result.solutions:
                rows.append([g, str(a), str(b), n_prime])
            divisors.append(result.divisor)
        self.out_of_scope("2K of a terminal Fano 3-fold is not divisible by 27 or more in Pic")
        return {
            "solutions": rows,
            "gcd_one": all(math.gcd(d, REDUCTION_NUMERATOR) == 1 for d in divisors),
            "min_divisor": min(divisors),
        }
