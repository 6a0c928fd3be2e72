"""
Dixon's modular method for ordinary character tables.

Class multiplication coefficients are counted on the materialized group,
their common eigenvectors are found over F_p with p = 1 mod exp(G), and
every value is lifted to Q(zeta_o) from the eigenvalue multiplicities of
the element powers. The lifted table must pass CharacterTable.verify().
"""

from __future__ import annotations

import logging
import time
from typing import Iterator, List, Optional

from sympy import Poly, Symbol, isprime, primitive_root, sqrt_mod
from sympy.polys.domains import FiniteField
from sympy.polys.matrices import DomainMatrix

from characters.table import CharacterTable
from config import DIXON_PRIME_CAP
from errors import CapExceeded, TableError
from exact.cyclotomic import CycloNum
from groups.classes import ConjClassData, conjugacy_data
from groups.model import GroupModel

logger = logging.getLogger(__name__)

_X = Symbol("x")


def dixon_prime(order: int, exponent: int, cap: int = DIXON_PRIME_CAP) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    p = exponent + 1
    while not (isprime(p) and p * p > 4 * order):
        p += exponent
        if p > cap:
            raise CapExceeded(f"no Dixon prime below {cap} for exponent {exponent}")
    return p


class ClassMatrices:
    """
    Lazily counted class multiplication matrices.

    M_r[i][t] = #{g in C_r : z_t * g in C_i} for class representatives z_t.
    A row vector v with v_t = chi(z_t)/chi(1) satisfies v M_r = omega_r v.
    """

    def __init__(self, G: GroupModel, classes: ConjClassData):
        self.G = G
        self.classes = classes
        self._cache = {}

    def __getitem__(self, r: int) -> List[List[int]]:
        if r not in self._cache:
            C = self.classes
            k = C.count
            M = [[0] * k for _ in range(k)]
            for t, z in enumerate(C.reps):
                for g in C.members[r]:
                    M[C.class_of[self.G.mul(z, g)]][t] += 1
            self._cache[r] = M
        return self._cache[r]

    def order_of_use(self) -> Iterator[int]:
        """Nonidentity classes, smallest first."""
        C = self.classes
        return iter(sorted(range(1, C.count), key=lambda r: (C.sizes[r], r)))


def eigenspace_decomposition(A: DomainMatrix) -> List[DomainMatrix]:
    """Left eigenspaces of A over its ground field, as row bases in rref."""
    A = A.transpose()
    Fp = A.domain
    charpoly = Poly(A.charpoly(), _X, domain=Fp)
    spaces = []
    for z in charpoly.ground_roots():
        z = Fp(z)
        B = A - DomainMatrix.diag([z] * A.shape[0], Fp)
        basis, _ = B.nullspace().rref()
        spaces.append(basis)
    return spaces


def refine_spaces(spaces: List[DomainMatrix], N: DomainMatrix) -> List[DomainMatrix]:
    """Split each invariant space by the left eigenspaces of N restricted to it."""
    out = []
    for S in spaces:
        if S.shape[0] <= 1:
            out.append(S)
            continue
        _, pivots = S.rref()
        restricted = (S * N).extract(range(S.shape[0]), list(pivots))
        for sub in eigenspace_decomposition(restricted):
            out.append(sub * S)
    return out


def common_eigenvectors(mats: ClassMatrices, p: int) -> List[List[int]]:
    """One normalized common eigenvector (v_0 = 1) per irreducible character."""
    Fp = FiniteField(p)
    k = mats.classes.count
    spaces: Optional[List[DomainMatrix]] = None
    used = 0
    for r in mats.order_of_use():
        N = DomainMatrix.from_list(mats[r], Fp)
        spaces = eigenspace_decomposition(N) if spaces is None else refine_spaces(spaces, N)
        used += 1
        if len(spaces) == k:
            break
    if spaces is None:
        spaces = [DomainMatrix.from_list([[1]], Fp)]
    if len(spaces) != k or any(S.shape[0] != 1 for S in spaces):
        raise TableError("eigenspaces", f"{len(spaces)} common eigenspaces for {k} classes")
    logger.info(f"🔄 Dixon: split with {used} class matrices over F_{p}")
    vectors = []
    for S in spaces:
        row = [int(x) % p for x in S.to_list()[0]]
        if row[0] == 0:
            raise TableError("eigenspaces", "eigenvector vanishes at the identity class")
        inv0 = pow(row[0], p - 2, p)
        vectors.append([x * inv0 % p for x in row])
    return vectors


def _degree_mod_p(v: List[int], classes: ConjClassData, p: int) -> int:
    """chi(1) from chi(1)^2 * sum |C_t| v_t v_{t*} = |G|."""
    n = classes.group_order
    dot = sum(classes.sizes[t] * v[t] * v[classes.inverse_class(t)] for t in range(classes.count)) % p
    if dot == 0:
        raise TableError("degree", "degenerate eigenvector normalization")
    sq = n * pow(dot, p - 2, p) % p
    root = sqrt_mod(sq, p)
    if root is None:
        raise TableError("degree", f"{sq} is not a square mod {p}")
    deg = min(root, p - root)
    if deg == 0 or n % deg or deg * deg > n:
        raise TableError("degree", f"lifted degree {deg} is impossible for order {n}")
    return deg


def _lift_value(chi_mod: List[int], t: int, deg: int, classes: ConjClassData, p: int, root: int) -> CycloNum:
    """chi(z_t) = sum_j m_j E(o)^j with m_j the multiplicity of eigenvalue zeta_o^j."""
    o = classes.orders[t]
    if o == 1:
        return CycloNum.rational(deg)
    z = pow(root, (p - 1) // o, p)
    powers = [chi_mod[classes.power_class(t, l)] for l in range(o)]
    inv_o = pow(o, p - 2, p)
    mults = {}
    total = 0
    for j in range(o):
        zj = pow(z, (-j) % o, p)
        acc = 0
        w = 1
        for l in range(o):
            acc += powers[l] * w
            w = w * zj % p
        m = acc % p * inv_o % p
        if m > deg:
            raise TableError("lift", f"eigenvalue multiplicity {m} exceeds degree {deg} at class {t}")
        if m:
            mults[j] = m
        total += m
    if total != deg:
        raise TableError("lift", f"multiplicities at class {t} sum to {total}, not {deg}")
    return CycloNum.from_powers(o, mults)


def _row_key(row: List[CycloNum]):
    deg = row[0].to_int()
    trivial = all(v == deg for v in row)
    return (deg, 0 if trivial else 1, tuple(v.key() for v in row))


def dixon_table(
    G: GroupModel,
    classes: Optional[ConjClassData] = None,
    prime: Optional[int] = None,
) -> CharacterTable:
    """
    Character table of G by Dixon's method.

    Args:
        G: Materialized group
        classes: Conjugacy data (computed if omitted)
        prime: Override for the modulus (must be 1 mod exp(G))

    Returns:
        A verified CharacterTable, rows sorted by (degree, trivial first, values)

    Raises:
        CapExceeded: no suitable prime under the cap
        TableError: lift inconsistency; the table is never returned unverified
    """
    start = time.time()
    logger.info(f"🔄 Dixon: {G.name} (order {G.order})")
    classes = classes or conjugacy_data(G)
    exponent = classes.exponent
    p = prime or dixon_prime(G.order, exponent)
    if (p - 1) % exponent:
        raise TableError("prime", f"{p} is not 1 mod exponent {exponent}")
    vectors = common_eigenvectors(ClassMatrices(G, classes), p)
    root = primitive_root(p)
    rows = []
    for v in vectors:
        deg = _degree_mod_p(v, classes, p)
        chi_mod = [x * deg % p for x in v]
        rows.append([_lift_value(chi_mod, t, deg, classes, p, root) for t in range(classes.count)])
    rows.sort(key=_row_key)
    table = CharacterTable(
        name=G.name,
        sizes=list(classes.sizes),
        orders=list(classes.orders),
        power_maps={q: list(m) for q, m in classes.power_maps.items()},
        irreducibles=rows,
        provenance="dixon",
    )
    table.verify()
    logger.info(f"✅ Dixon: {G.name} degrees {sorted(table.degrees)} at p={p} ({time.time() - start:.2f}s)")
    return table
