"""
Linear substitution on polynomials.
"""

from typing import Any, Dict, List, Sequence

import numpy as np

from errors import ArithmeticDomainError
from exact.mpoly import LinearImages, Monomial, MPoly


def act_on_poly(M: Sequence[Sequence[Any]], f: MPoly) -> MPoly:
    """
    f -> f(Mx).

    This is a right action: act_on_poly(A, act_on_poly(B, f)) equals
    act_on_poly(B @ A, f).

    Raises:
        ArithmeticDomainError: matrix size differs from the variable count
    """
    if len(M) != f.nvars:
        raise ArithmeticDomainError(f"{len(M)}x{len(M)} matrix acting on {f.nvars} variables")
    return f.substitute_linear(M)


def operator_matrix_mod(
    M: np.ndarray,
    monomials: Sequence[Monomial],
    variables: Sequence[str],
    p: int,
) -> np.ndarray:
    """
    Matrix of f -> f(Mx) on the span of `monomials` over F_p.

    Row i holds the coordinates of monomials[i] composed with M; the
    monomials must span an invariant subspace (e.g. all of one degree).
    """
    position: Dict[Monomial, int] = {m: i for i, m in enumerate(monomials)}
    images = LinearImages(variables, [[int(x) for x in row] for row in M])
    out = np.zeros((len(monomials), len(monomials)), dtype=np.int64)
    for i, mono in enumerate(monomials):
        for m2, c in images.image(mono).items():
            j = position.get(m2)
            if j is None:
                raise ArithmeticDomainError(f"image of {mono} leaves the monomial span")
            out[i, j] = c % p
    return out


def coordinates_mod(f: MPoly, monomials: Sequence[Monomial], p: int) -> List[int]:
    """Coefficient vector of an integer polynomial on `monomials`, reduced mod p."""
    position = {m: i for i, m in enumerate(monomials)}
    row = [0] * len(monomials)
    for mono, c in f.items():
        if mono not in position:
            raise ArithmeticDomainError(f"monomial {mono} outside the basis")
        row[position[mono]] = int(c) % p
    return row
