"""
Sparse multivariate polynomials over exact scalars.

Terms map exponent tuples to nonzero coefficients. The coefficient ring
(int/Fraction, CycloNum or FFElem) is whatever the caller puts in; it is
fixed per polynomial by convention, not enforced. Monomials are ordered
graded-lexicographically in the declared variable order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from errors import ArithmeticDomainError, ParseError
from exact.cyclotomic import CycloNum

Monomial = Tuple[int, ...]


def grlex_key(mono: Monomial) -> Tuple[int, Monomial]:
    return (sum(mono), mono)


def monomials_of_degree(nvars: int, d: int) -> List[Monomial]:
    """All exponent vectors of total degree d, in descending graded-lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grlex_key, reverse=True)
    return out


def _is_zero(c: Any) -> bool:
    return not c


class MPoly:
    """An immutable sparse polynomial."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Monomial, Any]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        n = len(self.variables)
        clean: Dict[Monomial, Any] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != n:
                raise ArithmeticDomainError(f"exponent {mono} does not match {n} variables")
            if not _is_zero(c):
                clean[tuple(mono)] = c
        self._terms = clean

    # ----- constructors -----

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Monomial, Any]) -> "MPoly":
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        return obj

    @classmethod
    def var(cls, variables: Sequence[str], i: int, coeff: Any = 1) -> "MPoly":
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): coeff})

    @classmethod
    def const(cls, variables: Sequence[str], c: Any) -> "MPoly":
        return cls(variables, {tuple([0] * len(variables)): c})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> List["MPoly"]:
        return [cls.var(variables, i) for i in range(len(variables))]

    # ----- accessors -----

    @property
    def terms(self) -> Dict[Monomial, Any]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Monomial, Any]]:
        return self._terms.items()

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, mono: Monomial) -> Any:
        return self._terms.get(tuple(mono), 0)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self._terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly._raw(self.variables, {m: c for m, c in self._terms.items() if sum(m) == d})

    def sorted_terms(self) -> List[Tuple[Monomial, Any]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, Any]:
        if not self._terms:
            raise ArithmeticDomainError("zero polynomial has no leading term")
        mono = max(self._terms, key=grlex_key)
        return mono, self._terms[mono]

    # ----- arithmetic -----

    def _check(self, other: "MPoly") -> None:
        if self.variables != other.variables:
            raise ArithmeticDomainError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _lift(self, other) -> Optional["MPoly"]:
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CycloNum)) or hasattr(other, "field"):
            return MPoly.const(self.variables, other)
        return None

    def __add__(self, other) -> "MPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            if m in terms:
                s = terms[m] + c
                if _is_zero(s):
                    del terms[m]
                else:
                    terms[m] = s
            else:
                terms[m] = c
        return MPoly._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c: Any) -> "MPoly":
        if _is_zero(c):
            return MPoly._raw(self.variables, {})
        return MPoly(self.variables, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction, CycloNum)) or hasattr(other, "field"):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        terms: Dict[Monomial, Any] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if m in terms:
                    terms[m] = terms[m] + c1 * c2
                else:
                    terms[m] = c1 * c2
        return MPoly(self.variables, terms)

    def __rmul__(self, other) -> "MPoly":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ArithmeticDomainError("negative polynomial power")
        result = MPoly.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._lift(other) if not isinstance(other, MPoly) else other
        if other is None or other.variables != self.variables:
            return False
        if self._terms.keys() != other._terms.keys():
            return False
        return all(self._terms[m] == other._terms[m] for m in self._terms)

    def __hash__(self) -> int:
        return hash((self.variables, frozenset((m, hash(c)) for m, c in self._terms.items())))

    # ----- calculus and evaluation -----

    def diff(self, i: int) -> "MPoly":
        terms: Dict[Monomial, Any] = {}
        for m, c in self._terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                terms[tuple(e)] = c * m[i]
        return MPoly(self.variables, terms)

    def gradient(self) -> List["MPoly"]:
        return [self.diff(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence[Any]) -> Any:
        if len(point) != self.nvars:
            raise ArithmeticDomainError(f"expected {self.nvars} values, got {len(point)}")
        total: Any = 0
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x ** e
            total = total + v
        return total

    def map_coeffs(self, fn: Callable[[Any], Any]) -> "MPoly":
        return MPoly(self.variables, {m: fn(c) for m, c in self._terms.items()})

    def substitute_linear(self, M: Sequence[Sequence[Any]]) -> "MPoly":
        """f(x) -> f(Mx), i.e. x_i -> sum_j M[i][j] x_j."""
        n = self.nvars
        if len(M) != n or any(len(row) != n for row in M):
            raise ArithmeticDomainError(f"matrix shape does not match {n} variables")
        images = LinearImages(self.variables, M)
        result: Dict[Monomial, Any] = {}
        for mono, c in self._terms.items():
            for m2, c2 in images.image(mono).items():
                v = c * c2
                if m2 in result:
                    result[m2] = result[m2] + v
                else:
                    result[m2] = v
        return MPoly(self.variables, result)

    # ----- normalization -----

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        if not self._terms:
            return Fraction(0)
        nums, dens = [], []
        for c in self._terms.values():
            q = _as_fraction(c)
            nums.append(q.numerator)
            dens.append(q.denominator)
        g = math.gcd(*nums)
        l = 1
        for d in dens:
            l = l * d // math.gcd(l, d)
        return Fraction(g, l)

    def primitive(self) -> Tuple[Fraction, "MPoly"]:
        """Return (s, P) with self = s * P, P integral of content 1 and positive leading coefficient."""
        if not self._terms:
            raise ArithmeticDomainError("zero polynomial has no primitive form")
        s = self.content()
        _, lead = self.leading_term()
        if _as_fraction(lead) < 0:
            s = -s
        prim = MPoly(self.variables, {m: int(_as_fraction(c) / s) for m, c in self._terms.items()})
        return s, prim

    def is_integral(self) -> bool:
        try:
            return all(_as_fraction(c).denominator == 1 for c in self._terms.values())
        except ArithmeticDomainError:
            return False

    # ----- text -----

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            atoms = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, mono) if e]
            body = "*".join(atoms)
            ctext = _coeff_text(c)
            neg = ctext.startswith("-") and _single_term(ctext[1:])
            if neg:
                ctext = ctext[1:]
            if not _single_term(ctext):
                ctext = f"({ctext})"
            if body:
                text = body if ctext == "1" else f"{ctext}*{body}"
            else:
                text = ctext
            parts.append(("-" if neg else "+", text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r})"


def _as_fraction(c: Any) -> Fraction:
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, CycloNum):
        return c.to_fraction()
    raise ArithmeticDomainError(f"coefficient {c!r} is not rational")


def _coeff_text(c: Any) -> str:
    if isinstance(c, CycloNum):
        return c.to_text()
    if hasattr(c, "field"):
        return str(c.value)
    return str(c)


def _single_term(text: str) -> bool:
    return "+" not in text and "-" not in text


class LinearImages:
    """
    Memoized images of monomials under x_i -> sum_j M[i][j] x_j.

    Products of linear forms are built one degree at a time and cached,
    so images of all monomials of a degree share their prefixes. Monomial
    matrices take a direct path.
    """

    def __init__(self, variables: Sequence[str], M: Sequence[Sequence[Any]]):
        self.variables = tuple(variables)
        self.n = len(self.variables)
        self.rows: List[List[Tuple[int, Any]]] = [
            [(j, c) for j, c in enumerate(row) if not _is_zero(c)] for row in M
        ]
        self.monomial = all(len(r) == 1 for r in self.rows)
        zero = tuple([0] * self.n)
        self._cache: Dict[Monomial, Dict[Monomial, Any]] = {zero: {zero: 1}}

    def image(self, mono: Monomial) -> Dict[Monomial, Any]:
        if self.monomial:
            return self._monomial_image(mono)
        cached = self._cache.get(mono)
        if cached is not None:
            return cached
        i = next(k for k, e in enumerate(mono) if e)
        prev = list(mono)
        prev[i] -= 1
        base = self.image(tuple(prev))
        out: Dict[Monomial, Any] = {}
        for m, c in base.items():
            for j, a in self.rows[i]:
                e = list(m)
                e[j] += 1
                key = tuple(e)
                v = c * a
                if key in out:
                    out[key] = out[key] + v
                else:
                    out[key] = v
        out = {m: c for m, c in out.items() if not _is_zero(c)}
        self._cache[mono] = out
        return out

    def _monomial_image(self, mono: Monomial) -> Dict[Monomial, Any]:
        e = [0] * self.n
        coeff: Any = 1
        for i, k in enumerate(mono):
            if k:
                j, a = self.rows[i][0]
                e[j] += k
                coeff = coeff * a ** k
        return {tuple(e): coeff}


def matpoly_det(M: Sequence[Sequence[MPoly]]) -> MPoly:
    """
    Determinant of a square matrix of polynomials by cofactor expansion.

    Minors are memoized on their column sets, so an n x n determinant
    costs O(n 2^n) polynomial products.
    """
    n = len(M)
    if n == 0 or any(len(row) != n for row in M):
        raise ArithmeticDomainError("matpoly_det needs a non-empty square matrix")
    variables = M[0][0].variables
    memo: Dict[Tuple[int, ...], MPoly] = {}

    def minor(row: int, cols: Tuple[int, ...]) -> MPoly:
        if row == n:
            return MPoly.const(variables, 1)
        if cols in memo:
            return memo[cols]
        total = MPoly(variables)
        for pos, col in enumerate(cols):
            entry = M[row][col]
            if entry.is_zero():
                continue
            rest = cols[:pos] + cols[pos + 1:]
            term = entry * minor(row + 1, rest)
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def parse_poly(text: str, variables: Sequence[str]) -> MPoly:
    """Parse a rational-coefficient polynomial like "x1*x2^3 + 2*x3 - 1/2"."""
    index = {v: i for i, v in enumerate(variables)}
    out = MPoly(variables)
    cleaned = text.replace(" ", "").replace("-", "+-")
    for chunk in cleaned.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coeff = Fraction(sign)
        e = [0] * len(variables)
        for factor in chunk.split("*"):
            base, _, power = factor.partition("^")
            if base in index:
                e[index[base]] += int(power) if power else 1
            else:
                try:
                    coeff *= Fraction(base) ** (int(power) if power else 1)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad polynomial factor {factor!r} in {text!r}") from exc
        out = out + MPoly(variables, {tuple(e): coeff})
    return out
