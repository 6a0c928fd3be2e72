"""
Exact solvers for the small Diophantine systems of the case analyses.

The two-ray link systems have the shape

    N' = K a - N b
    -2N' = K a^2 - 2N b^2 - 2N a b

with K the anticanonical degree. Eliminating a = (N' + N b) / K leaves
b^2 N (N + 2K) = N' (N' + 2K), so b is rational iff that quotient is a
rational square.
"""

import math
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple, Union

from errors import ArithmeticDomainError

Rational = Union[int, Fraction]

LINK_N = (7, 14)
LINK_N_PRIME = (2, 7, 14)
LINK_GENERA = (6, 10, 11, 12)
REDUCTION_N = 7


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Nonnegative rational square root of q, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def solve_quadratic_system(K: Rational, N: int, n_prime: int) -> List[Tuple[Fraction, Fraction]]:
    """
    Rational solutions (a, b) with a > 0.

    Args:
        K: Anticanonical degree (-K)^3 of the blown-up 3-fold
        N: Components of the exceptional divisor
        n_prime: Components of the other exceptional divisor
    """
    K = Fraction(K)
    if K <= 0 or N <= 0:
        return []
    b_squared = Fraction(n_prime * (n_prime + 2 * K)) / (N * (N + 2 * K))
    root = rational_sqrt(b_squared)
    if root is None:
        return []
    out = []
    for b in sorted({root, -root}):
        a = (n_prime + N * b) / K
        if a > 0:
            out.append((a, b))
    return out


def check_link_solution(K: Rational, N: int, n_prime: int, a: Fraction, b: Fraction) -> bool:
    """Back substitution into both equations."""
    K = Fraction(K)
    first = K * a - N * b == n_prime
    second = K * a * a - 2 * N * b * b - 2 * N * a * b == -2 * n_prime
    return first and second


def solve_link_system(N: int, n_prime: int, g: int) -> List[Tuple[Fraction, Fraction]]:
    """Link system with K = 2g - 2."""
    return solve_quadratic_system(2 * g - 2, N, n_prime)


class ReductionResult(NamedTuple):
    """
    Solutions of the reduction system for one genus.

    Attributes:
        solutions: (a, b, N') triples
        divisor: 4g + 3, which must divide 2K in Pic when gcd(4g + 3, 28) = 1
        contradiction: True when every solution forces that divisibility
    """

    solutions: List[Tuple[Fraction, Fraction, int]]
    divisor: int
    contradiction: bool


def solve_reduction_system(g: int, n_primes: Tuple[int, ...] = LINK_N_PRIME) -> ReductionResult:
    """
    Reduction system with K = 2g + 3/2 and N = 7.

    For each solution a = p/q in lowest terms, q E' ~ p (-K) with 2E' and
    2K Cartier forces 2K divisible by q when gcd(p, q) = 1.
    """
    if g < 1:
        return ReductionResult([], 0, False)
    K = Fraction(4 * g + 3, 2)
    solutions = [
        (a, b, n_prime)
        for n_prime in n_primes
        for a, b in solve_quadratic_system(K, REDUCTION_N, n_prime)
    ]
    divisor = 4 * g + 3
    contradiction = bool(solutions) and all(
        a.denominator == divisor and math.gcd(a.numerator, divisor) == 1 for a, _, _ in solutions
    )
    return ReductionResult(solutions, divisor, contradiction)


def conic_intersection(g: int, m: int) -> Fraction:
    """
    x with -2m + m(m-1)x = 2g - 2.

    m curves of self-intersection -2 on a K3 hyperplane section, permuted
    doubly transitively, pairwise meeting x times, summing to the polarisation.

    Raises:
        ArithmeticDomainError: m < 2
    """
    if m < 2:
        raise ArithmeticDomainError(f"need at least two components, got m={m}")
    return Fraction(2 * g - 2 + 2 * m, m * (m - 1))


def forced_divisor(K3: int, component_counts) -> int:
    """
    gcd over N of K3 / gcd(K3, N): the degree of a component E of a
    G-orbit with N components, N deg(E) = a K3, is always divisible by it.
    """
    out = 0
    for n in component_counts:
        out = math.gcd(out, K3 // math.gcd(K3, n))
    return out
