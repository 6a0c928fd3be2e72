"""
Character tables and class functions.

A CharacterTable stores class sizes, element orders, prime power maps
and the irreducible characters as rows of CycloNum values. `verify()`
is the acceptance gate for every table, computed or loaded: nothing
downstream consumes a table that has not passed it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import primerange

from errors import NotACharacterError, TableError
from exact.cyclotomic import CycloNum, as_cyclo, class_sum, field_degree, lcm
from groups.classes import compose_power_maps

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, CycloNum]

COLUMN_CHECK_MAX_CLASSES = 16


@dataclass
class CharacterTable:
    """
    Ordinary character table.

    Attributes:
        name: Group name
        sizes: Class sizes (class 0 is the identity)
        orders: Element order per class
        power_maps: prime -> class map, for every prime up to the largest element order
        irreducibles: Character values, rows = characters, columns = classes
        provenance: "dixon" or "file"
    """

    name: str
    sizes: List[int]
    orders: List[int]
    power_maps: Dict[int, List[int]]
    irreducibles: List[List[CycloNum]]
    provenance: str = "dixon"
    verified: bool = field(default=False, compare=False)

    # ----- shape -----

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @property
    def class_count(self) -> int:
        return len(self.sizes)

    @property
    def degrees(self) -> List[int]:
        return [row[0].to_int() for row in self.irreducibles]

    @property
    def exponent(self) -> int:
        return lcm(*self.orders)

    def power_class(self, t: int, k: int) -> int:
        return compose_power_maps(self.power_maps, self.orders, t, k)

    def inverse_class(self, t: int) -> int:
        return self.power_class(t, -1)

    def character(self, i: int) -> "ClassFunction":
        return ClassFunction(self, tuple(self.irreducibles[i]))

    def characters(self) -> List["ClassFunction"]:
        return [self.character(i) for i in range(len(self.irreducibles))]

    def trivial(self) -> "ClassFunction":
        return ClassFunction.constant(self, 1)

    def class_function(self, values: Sequence[Scalar]) -> "ClassFunction":
        return ClassFunction(self, tuple(as_cyclo(v) for v in values))

    def indices_of_degree(self, d: int) -> List[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    # ----- inner products -----

    def inner(self, f: Sequence[CycloNum], g: Sequence[CycloNum]) -> CycloNum:
        """(1/|G|) sum_t |C_t| f(t) conj(g(t))."""
        terms = [f[t] * g[t].conjugate() * self.sizes[t] for t in range(self.class_count) if f[t] and g[t]]
        return class_sum(terms) / self.order

    # ----- verification -----

    def verify(self) -> "CharacterTable":
        """
        Check every table invariant exactly.

        Raises:
            TableError: naming the violated relation
        """
        k = self.class_count
        n = self.order
        if len(self.orders) != k:
            raise TableError("shape", f"{len(self.orders)} element orders for {k} classes")
        if self.sizes[0] != 1 or self.orders[0] != 1:
            raise TableError("identity-class", "class 0 must be the identity")
        if len(self.irreducibles) != k:
            raise TableError("class-count", f"{len(self.irreducibles)} characters for {k} classes")
        for i, row in enumerate(self.irreducibles):
            if len(row) != k:
                raise TableError("shape", f"character {i} has {len(row)} values")
        for t in range(k):
            if n % self.sizes[t]:
                raise TableError("class-size", f"class {t} size {self.sizes[t]} does not divide {n}")
        for q in primerange(2, max(self.orders) + 1):
            if q not in self.power_maps:
                raise TableError("power-map", f"missing power map for prime {q}")
            pm = self.power_maps[q]
            for t in range(k):
                o = self.orders[t]
                expect = o // gcd(o, q)
                if self.orders[pm[t]] != expect:
                    raise TableError("power-map", f"pow {q} sends class {t} (order {o}) to order {self.orders[pm[t]]}")

        degrees = []
        for i, row in enumerate(self.irreducibles):
            d = row[0]
            if not d.is_rational() or d.to_fraction().denominator != 1 or d.to_fraction() <= 0:
                raise TableError("degree", f"character {i} has degree {d}")
            deg = d.to_int()
            if n % deg:
                raise TableError("degree-divides-order", f"degree {deg} does not divide {n}")
            degrees.append(deg)
        if sum(d * d for d in degrees) != n:
            raise TableError("degree-sum", f"sum of squared degrees {sum(d * d for d in degrees)} != {n}")

        for i in range(k):
            for j in range(i, k):
                ip = self.inner(self.irreducibles[i], self.irreducibles[j])
                expect = 1 if i == j else 0
                if ip != expect:
                    raise TableError("row-orthogonality", f"<chi_{i}, chi_{j}> = {ip}, expected {expect}")
        if k > COLUMN_CHECK_MAX_CLASSES:
            logger.debug(f"{self.name}: {k} classes, column orthogonality skipped (rows checked only)")
        else:
            for s in range(k):
                for t in range(s, k):
                    total = class_sum([row[s] * row[t].conjugate() for row in self.irreducibles])
                    expect = n // self.sizes[s] if s == t else 0
                    if total != expect:
                        raise TableError("column-orthogonality", f"columns {s},{t} give {total}, expected {expect}")

        for i in range(k):
            ind = fs_indicator(self, i)
            real = all(v == v.conjugate() for v in self.irreducibles[i])
            if ind not in (-1, 0, 1) or (ind == 0) == real:
                raise TableError("frobenius-schur", f"character {i}: indicator {ind}, real-valued {real}")
        self.verified = True
        logger.info(f"✅ {self.name}: table verified ({k} classes, degrees {sorted(degrees)})")
        return self


@dataclass(frozen=True)
class ClassFunction:
    """A class function on the classes of `table`."""

    table: CharacterTable
    values: Tuple[CycloNum, ...]

    def __post_init__(self):
        if len(self.values) != self.table.class_count:
            raise ValueError(f"{len(self.values)} values for {self.table.class_count} classes")

    @classmethod
    def constant(cls, table: CharacterTable, c: Scalar) -> "ClassFunction":
        v = as_cyclo(c)
        return cls(table, tuple(v for _ in range(table.class_count)))

    def __getitem__(self, t: int) -> CycloNum:
        return self.values[t]

    @property
    def degree(self) -> CycloNum:
        return self.values[0]

    def _other(self, other) -> Tuple[CycloNum, ...]:
        if isinstance(other, ClassFunction):
            if other.table is not self.table and other.table.sizes != self.table.sizes:
                raise ValueError("class functions on different tables")
            return other.values
        v = as_cyclo(other)
        return tuple(v for _ in self.values)

    def __add__(self, other) -> "ClassFunction":
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, self._other(other))))

    __radd__ = __add__

    def __sub__(self, other) -> "ClassFunction":
        return ClassFunction(self.table, tuple(a - b for a, b in zip(self.values, self._other(other))))

    def __mul__(self, other) -> "ClassFunction":
        return ClassFunction(self.table, tuple(a * b for a, b in zip(self.values, self._other(other))))

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "ClassFunction":
        return ClassFunction(self.table, tuple(a / c for a in self.values))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v.conjugate() for v in self.values))

    def galois(self, k: int) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v.galois(k) for v in self.values))

    def power(self, k: int) -> "ClassFunction":
        """g -> f(g^k)."""
        return ClassFunction(self.table, tuple(self.values[self.table.power_class(t, k)] for t in range(len(self.values))))

    def tensor_power(self, k: int) -> "ClassFunction":
        out = ClassFunction.constant(self.table, 1)
        for _ in range(k):
            out = out * self
        return out

    def inner(self, other: "ClassFunction") -> CycloNum:
        return self.table.inner(self.values, self._other(other))

    def norm(self) -> CycloNum:
        return self.inner(self)

    def kernel(self) -> List[int]:
        """Classes where f(g) = f(1)."""
        d = self.values[0]
        return [t for t, v in enumerate(self.values) if v == d]

    def is_faithful(self) -> bool:
        return self.kernel() == [0]

    def is_real(self) -> bool:
        return all(v == v.conjugate() for v in self.values)

    def lambda2(self) -> "ClassFunction":
        """(f(g)^2 - f(g^2)) / 2."""
        return (self * self - self.power(2)) / 2

    def sym2(self) -> "ClassFunction":
        return (self * self + self.power(2)) / 2

    def __repr__(self) -> str:
        return f"ClassFunction({self.table.name}: {' | '.join(v.to_text() for v in self.values)})"


def fs_indicator(T: CharacterTable, i: int) -> int:
    """Frobenius-Schur indicator (1/|G|) sum_g chi(g^2)."""
    row = T.irreducibles[i]
    total = class_sum([row[T.power_class(t, 2)] * T.sizes[t] for t in range(T.class_count)]) / T.order
    if not total.is_rational() or total.to_fraction().denominator != 1:
        raise TableError("frobenius-schur", f"character {i}: indicator {total} is not an integer")
    return total.to_int()


def multiplicities(f: ClassFunction, characters: Optional[Iterable[int]] = None) -> List[CycloNum]:
    T = f.table
    idx = range(len(T.irreducibles)) if characters is None else characters
    return [f.inner(T.character(i)) for i in idx]


def decompose(f: ClassFunction, T: Optional[CharacterTable] = None) -> List[Tuple[int, int]]:
    """
    Decompose a character into irreducibles.

    Returns:
        (character index, multiplicity) pairs with positive multiplicity

    Raises:
        NotACharacterError: non-integral or negative multiplicity, or degree mismatch

    Example:
        >>> decompose(T.character(2) * T.character(2).conjugate())[0]
        (0, 1)
    """
    T = T or f.table
    out: List[Tuple[int, int]] = []
    total = 0
    for i, m in enumerate(multiplicities(ClassFunction(T, f.values))):
        if not m.is_rational() or m.to_fraction().denominator != 1:
            raise NotACharacterError(f"multiplicity of chi_{i} in {T.name} is {m}, not an integer")
        mi = m.to_int()
        if mi < 0:
            raise NotACharacterError(f"multiplicity of chi_{i} in {T.name} is negative ({mi})")
        if mi:
            out.append((i, mi))
            total += mi * T.degrees[i]
    if as_cyclo(total) != f.degree:
        raise NotACharacterError(f"degrees of constituents sum to {total}, not {f.degree}")
    return out


def degree_split(f: ClassFunction) -> List[int]:
    """Sorted degrees of the irreducible constituents, with repetition."""
    T = f.table
    return sorted(d for i, m in decompose(f) for d in [T.degrees[i]] * m)


def sym_power_char(chi: ClassFunction, d: int) -> ClassFunction:
    """
    Character of Sym^d by the Newton recursion
    S_d(g) = (1/d) sum_{k=1..d} chi(g^k) S_{d-k}(g).
    """
    if d < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    T = chi.table
    values = []
    for t in range(T.class_count):
        p = [chi.values[T.power_class(t, k)] for k in range(d + 1)]
        s = [as_cyclo(1)]
        for m in range(1, d + 1):
            s.append(class_sum([p[k] * s[m - k] for k in range(1, m + 1)]) / m)
        values.append(s[d])
    out = ClassFunction(T, tuple(values))
    deg = out.degree
    expect = comb(chi.degree.to_int() + d - 1, d) if d else 1
    if deg != expect:
        raise NotACharacterError(f"Sym^{d} has degree {deg}, expected {expect}")
    return out


def molien_dim(chi: ClassFunction, d: int) -> int:
    """Dimension of the degree-d invariants, <Sym^d chi, 1>."""
    m = sym_power_char(chi, d).inner(chi.table.trivial())
    if not m.is_rational() or m.to_fraction().denominator != 1 or m.to_fraction() < 0:
        raise NotACharacterError(f"<Sym^{d}, 1> = {m} is not a nonnegative integer")
    return m.to_int()


def molien_series(chi: ClassFunction, d_max: int) -> List[int]:
    return [molien_dim(chi, d) for d in range(d_max + 1)]


def realdim(T: CharacterTable, i: int) -> int:
    """Real dimension of the smallest real representation containing chi_i."""
    deg = T.degrees[i]
    return deg if fs_indicator(T, i) == 1 else 2 * deg


def _kernel_mask(T: CharacterTable, i: int) -> int:
    mask = 0
    for t in T.character(i).kernel():
        mask |= 1 << t
    return mask


def min_faithful_dim(T: CharacterTable, field: str = "complex") -> int:
    """
    Smallest dimension of a faithful representation over C or R.

    Minimizes the cost of a set of irreducibles whose kernels intersect
    in the identity class; repeats never shrink a kernel, so sets suffice.
    """
    if field not in ("complex", "real"):
        raise ValueError(f"field must be 'complex' or 'real', got {field!r}")
    full = (1 << T.class_count) - 1
    costs = {}
    for i in range(1, len(T.irreducibles)):
        cost = T.degrees[i] if field == "complex" else realdim(T, i)
        mask = _kernel_mask(T, i)
        costs[mask] = min(costs.get(mask, cost), cost)
    if T.class_count == 1:
        return 0
    best = {full: 0}
    frontier = [full]
    while frontier:
        nxt = []
        for m in frontier:
            for km, c in costs.items():
                nm = m & km
                if nm != m and best[m] + c < best.get(nm, 1 << 60):
                    best[nm] = best[m] + c
                    nxt.append(nm)
        frontier = nxt
    if 1 not in best:
        raise TableError("faithful", f"{T.name}: no faithful combination of irreducibles")
    return best[1]


def char_field_rational_dim(T: CharacterTable, i: int) -> int:
    """deg(chi_i) * [Q(chi_i) : Q], taking the Schur index to be 1."""
    return T.degrees[i] * field_degree(T.irreducibles[i])


def min_nontrivial_rational_dim(T: CharacterTable) -> int:
    return min(char_field_rational_dim(T, i) for i in range(1, len(T.irreducibles)))


def restrict(chi: ClassFunction, H_table: CharacterTable, fusion: Sequence[int]) -> ClassFunction:
    """Restriction to a subgroup through its class fusion map."""
    if len(fusion) != H_table.class_count:
        raise ValueError("fusion map length differs from subgroup class count")
    return ClassFunction(H_table, tuple(chi.values[f] for f in fusion))
