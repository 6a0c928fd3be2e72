"""
Smoothness certificates for projective hypersurfaces.

{f = 0} in P^(n-1) is smooth over F_p-bar iff f and its partials have no
common projective zero, iff the ideal they generate contains every
monomial of some degree D. The Macaulay matrix in degree D has one row per
product (monomial) * generator; full column rank over F_p is the
certificate. Smoothness of the reduction mod p implies smoothness over Q.
"""

from __future__ import annotations

import hashlib
import logging
import time
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import numpy as np
from sympy import isprime

from config import DEFAULT_CERT_PRIMES, MAX_MONOMIALS
from errors import ArithmeticDomainError, CapExceeded
from exact.linalg import rref_mod
from exact.mpoly import MPoly, monomials_of_degree
from models import CertificateRecord, CertificateVerdict

logger = logging.getLogger(__name__)


def macaulay_degree(nvars: int, degree: int) -> int:
    """Degree at which n forms of degree e-1 without common zero generate everything."""
    return nvars * (degree - 2) + 1


def poly_hash(f: MPoly) -> str:
    return hashlib.sha256(f.to_text().encode()).hexdigest()[:16]


@dataclass
class SmoothnessCertificate:
    """
    Outcome of one Macaulay rank computation.

    Attributes:
        poly_hash: sha256 prefix of the polynomial text
        p: Prime
        D: Degree of the Macaulay matrix
        rows / cols: Matrix shape
        rank: Rank over F_p
        verdict: certified, failed (D at or above the Macaulay bound) or inconclusive
        cokernel: Monomials not reached, as text (truncated)
    """

    poly_hash: str
    p: int
    D: int
    rows: int
    cols: int
    rank: int
    verdict: CertificateVerdict
    cokernel: List[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict == CertificateVerdict.CERTIFIED

    def to_record(self, label: str = "") -> CertificateRecord:
        return CertificateRecord(
            label=label,
            poly_hash=self.poly_hash,
            p=self.p,
            degree=self.D,
            rows=self.rows,
            cols=self.cols,
            rank=self.rank,
            verdict=self.verdict,
        )


def _monomial_text(mono, variables) -> str:
    atoms = [v if e == 1 else f"{v}^{e}" for v, e in zip(variables, mono) if e]
    return "*".join(atoms) or "1"


def smoothness_certificate(
    f: MPoly,
    p: int,
    D: Optional[int] = None,
    max_monomials: int = MAX_MONOMIALS,
) -> SmoothnessCertificate:
    """
    Macaulay certificate for {f = 0} over F_p in degree D.

    Args:
        f: Homogeneous polynomial with integer coefficients
        p: Prime not dividing the content of f
        D: Matrix degree (default: the Macaulay bound)

    Raises:
        ArithmeticDomainError: zero, non-homogeneous or non-integral f; bad prime; D < deg f
        CapExceeded: more than max_monomials columns
    """
    if f.is_zero() or not f.is_homogeneous():
        raise ArithmeticDomainError("smoothness needs a nonzero homogeneous polynomial")
    if not f.is_integral():
        raise ArithmeticDomainError("smoothness needs integer coefficients")
    if not isprime(p):
        raise ArithmeticDomainError(f"{p} is not prime")
    if f.content().numerator % p == 0:
        raise ArithmeticDomainError(f"{p} divides the content of the polynomial")
    n, e = f.nvars, f.degree()
    bound = macaulay_degree(n, e)
    D = bound if D is None else D
    if D < e:
        raise ArithmeticDomainError(f"degree {D} is below deg f = {e}")

    start = time.time()
    columns = monomials_of_degree(n, D)
    if len(columns) > max_monomials:
        raise CapExceeded(f"Macaulay matrix needs {len(columns)} columns", undecided=[poly_hash(f)])
    position = {m: j for j, m in enumerate(columns)}
    generators = [f] + [g for g in f.gradient() if not g.is_zero()]
    rows: List[List[int]] = []
    for g in generators:
        gd = g.degree()
        if gd > D:
            continue
        for mono in monomials_of_degree(n, D - gd):
            row = [0] * len(columns)
            for m, c in g.items():
                row[position[tuple(a + b for a, b in zip(m, mono))]] = int(c) % p
            rows.append(row)
    A = np.array(rows, dtype=np.int64) if rows else np.zeros((0, len(columns)), dtype=np.int64)
    _, pivots = rref_mod(A, p) if rows else (A, [])
    rank = len(pivots)
    if rank == len(columns):
        verdict = CertificateVerdict.CERTIFIED
        cokernel: List[str] = []
    else:
        # the bound only applies when p does not divide e (Euler: f lies in the partials ideal)
        verdict = CertificateVerdict.FAILED if D >= bound and e % p else CertificateVerdict.INCONCLUSIVE
        piv = set(pivots)
        cokernel = [_monomial_text(columns[j], f.variables) for j in range(len(columns)) if j not in piv][:20]
    cert = SmoothnessCertificate(poly_hash(f), p, D, len(rows), len(columns), rank, verdict, cokernel)
    logger.info(
        f"✅ Macaulay degree {D} over F_{p}: {len(rows)}x{len(columns)}, rank {rank} "
        f"-> {verdict.value} ({time.time() - start:.2f}s)"
    )
    return cert


def certify_smooth(
    f: MPoly,
    primes: Iterable[int] = DEFAULT_CERT_PRIMES,
    D: Optional[int] = None,
) -> SmoothnessCertificate:
    """First certificate over the given primes, else the last attempt."""
    last: Optional[SmoothnessCertificate] = None
    for p in primes:
        if f.content().numerator % p == 0:
            continue
        last = smoothness_certificate(f, p, D)
        if last.certified:
            return last
        logger.warning(f"⚠️ no certificate at p={p}: {last.verdict.value}")
    if last is None:
        raise ArithmeticDomainError("no usable prime for the certificate")
    return last
