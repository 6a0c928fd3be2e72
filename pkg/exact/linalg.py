"""
Linear algebra over F_p on numpy int64 arrays (p < 2^31).
"""

from typing import List, Tuple

import numpy as np

from errors import ArithmeticDomainError

MAX_MODULUS = 2**31


def mod_p(A: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(A % p, dtype=np.int64)


def inv_mod_scalar(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ArithmeticDomainError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def rref_mod(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over GF(p). Returns (R, pivot_cols)."""
    if p >= MAX_MODULUS:
        raise ArithmeticDomainError(f"modulus {p} too large for int64 elimination")
    R = mod_p(np.array(A, dtype=np.int64, copy=True), p)
    m, n = R.shape
    r = 0
    pivots: List[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * inv_mod_scalar(R[r, c], p)) % p
        col = R[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            R[rows] = (R[rows] - np.outer(col[rows], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod(A: np.ndarray, p: int) -> int:
    _, pivots = rref_mod(A, p)
    return len(pivots)


def nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace basis of A over GF(p); columns form a basis."""
    R, pivots = rref_mod(A, p)
    n = R.shape[1]
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-R[row, f]) % p
    return basis


def row_space_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Nonzero rows of the reduced echelon form."""
    R, pivots = rref_mod(A, p)
    return R[: len(pivots)]


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Product mod p, accumulating in blocks so int64 never overflows."""
    A = mod_p(A, p)
    B = mod_p(B, p)
    k = A.shape[1]
    block = max(1, (2**62) // max(1, (p - 1) ** 2))
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for start in range(0, k, block):
        out = (out + A[:, start:start + block] @ B[start:start + block]) % p
    return out
