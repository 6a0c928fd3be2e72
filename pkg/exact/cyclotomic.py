"""
Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1)
as integer numerators over one positive common denominator, fully reduced
modulo the n-th cyclotomic polynomial. Operands of different conductors
are raised to the lcm of their conductors; results are never lowered.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Poly, Symbol, cyclotomic_poly, factorint, totient

from errors import ArithmeticDomainError, ParseError

Scalar = Union[int, Fraction, "CycloNum"]

_X = Symbol("x")


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    coeffs = Poly(cyclotomic_poly(n, _X), _X).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(totient(n))


def _mobius(n: int) -> int:
    factors = factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> Tuple[Fraction, ...]:
    """Normalized trace Tr(zeta_n^i)/phi(n) for each basis index i."""
    weights = []
    for i in range(euler_phi(n)):
        m = n // math.gcd(i, n)
        weights.append(Fraction(_mobius(m), euler_phi(m)))
    return tuple(weights)


@lru_cache(maxsize=None)
def units(n: int) -> Tuple[int, ...]:
    """The group (Z/n)^x as sorted residues."""
    return tuple(k for k in range(1, n + 1) if math.gcd(k, n) == 1 and (k < n or n == 1))


def _reduce(n: int, poly: List[int]) -> List[int]:
    """Reduce an integer polynomial in zeta_n modulo Phi_n (in place); returns phi(n) coordinates."""
    phi = _phi_coeffs(n)
    d = len(phi) - 1
    for i in range(len(poly) - 1, d - 1, -1):
        c = poly[i]
        if c:
            poly[i] = 0
            base = i - d
            for j in range(d):
                pj = phi[j]
                if pj:
                    poly[base + j] -= c * pj
    if len(poly) < d:
        poly.extend([0] * (d - len(poly)))
    return poly[:d]


class CycloNum:
    """An element of Q(zeta_n) in canonical reduced form."""

    __slots__ = ("_n", "_num", "_den")

    def __init__(self, n: int, num: Sequence[int], den: int = 1):
        if n < 1:
            raise ArithmeticDomainError(f"conductor must be positive, got {n}")
        if den == 0:
            raise ArithmeticDomainError("zero denominator")
        num = tuple(int(v) for v in num)
        if len(num) != euler_phi(n):
            raise ArithmeticDomainError(f"expected {euler_phi(n)} coordinates for conductor {n}, got {len(num)}")
        if den < 0:
            num = tuple(-v for v in num)
            den = -den
        g = math.gcd(den, *num) if any(num) else den
        if g > 1:
            num = tuple(v // g for v in num)
            den //= g
        if not any(num):
            den = 1
        self._n = n
        self._num = num
        self._den = den

    # ----- constructors -----

    @classmethod
    def _from_poly(cls, n: int, poly: List[int], den: int = 1) -> "CycloNum":
        return cls(n, _reduce(n, poly), den)

    @classmethod
    def rational(cls, q: Union[int, Fraction], n: int = 1) -> "CycloNum":
        q = Fraction(q)
        num = [0] * euler_phi(n)
        num[0] = q.numerator
        return cls(n, num, q.denominator)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloNum":
        """zeta_n^k."""
        poly = [0] * n
        poly[k % n] = 1
        return cls._from_poly(n, poly)

    @classmethod
    def from_powers(cls, n: int, powers: Mapping[int, Union[int, Fraction]]) -> "CycloNum":
        """Sum of c_k * zeta_n^k over the mapping k -> c_k."""
        den = lcm(*(Fraction(c).denominator for c in powers.values())) if powers else 1
        poly = [0] * n
        for k, c in powers.items():
            c = Fraction(c)
            poly[k % n] += c.numerator * (den // c.denominator)
        return cls._from_poly(n, poly, den)

    # ----- accessors -----

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v, self._den) for v in self._num)

    @property
    def numerators(self) -> Tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def key(self) -> Tuple[int, Tuple[int, ...], int]:
        """Exact hashable identity at the stored conductor."""
        return (self._n, self._num, self._den)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_integral(self) -> bool:
        """True when the element lies in Z[zeta_n] (the power basis is integral)."""
        return self._den == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ArithmeticDomainError(f"{self.to_text()} is not rational")
        return Fraction(self._num[0], self._den)

    def to_int(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ArithmeticDomainError(f"{q} is not an integer")
        return q.numerator

    # ----- conductor handling -----

    def embed(self, m: int) -> "CycloNum":
        """Raise to conductor m (a multiple of the current conductor)."""
        n = self._n
        if m == n:
            return self
        if m % n:
            raise ArithmeticDomainError(f"cannot embed conductor {n} into {m}")
        step = m // n
        poly = [0] * m
        for i, c in enumerate(self._num):
            if c:
                poly[(i * step) % m] += c
        return CycloNum._from_poly(m, poly, self._den)

    @staticmethod
    def _coerce(other) -> Optional["CycloNum"]:
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(other)
        return None

    def _common(self, other: "CycloNum") -> Tuple[int, "CycloNum", "CycloNum"]:
        if self._n == other._n:
            return self._n, self, other
        if other.is_rational():
            return self._n, self, CycloNum.rational(other.to_fraction(), self._n)
        if self.is_rational():
            return other._n, CycloNum.rational(self.to_fraction(), other._n), other
        m = lcm(self._n, other._n)
        return m, self.embed(m), other.embed(m)

    # ----- arithmetic -----

    def __add__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n, a, b = self._common(other)
        num = [x * b._den + y * a._den for x, y in zip(a._num, b._num)]
        return CycloNum(n, num, a._den * b._den)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self._n, [-v for v in self._num], self._den)

    def __sub__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def _scale(self, q: Fraction) -> "CycloNum":
        return CycloNum(self._n, [v * q.numerator for v in self._num], self._den * q.denominator)

    def __mul__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.is_rational():
            return self._scale(other.to_fraction())
        if self.is_rational():
            return other * self
        n, a, b = self._common(other)
        an, bn = a._num, b._num
        prod = [0] * (len(an) + len(bn) - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        prod[i + j] += x * y
        return CycloNum._from_poly(n, prod, a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ArithmeticDomainError("division by zero in cyclotomic field")
        if self.is_rational():
            return CycloNum.rational(1 / self.to_fraction(), self._n)
        conj = CycloNum.rational(1, self._n)
        for k in units(self._n):
            if k != 1:
                conj = conj * self.galois(k)
        norm = (self * conj).to_fraction()
        return conj * (1 / norm)

    def __truediv__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ArithmeticDomainError("division by zero")
            return self._scale(1 / Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "CycloNum":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.rational(1, self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, k: int) -> "CycloNum":
        """Image under the automorphism zeta_n -> zeta_n^k."""
        n = self._n
        if math.gcd(k, n) != 1:
            raise ArithmeticDomainError(f"Galois index {k} is not coprime to conductor {n}")
        if self.is_rational():
            return self
        poly = [0] * n
        for i, c in enumerate(self._num):
            if c:
                poly[(i * k) % n] += c
        return CycloNum._from_poly(n, poly, self._den)

    def conjugate(self) -> "CycloNum":
        return self.galois(-1)

    # ----- comparison -----

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._n == other._n:
            return self._num == other._num and self._den == other._den
        _, a, b = self._common(other)
        return a._num == b._num and a._den == b._den

    def __hash__(self) -> int:
        weights = _trace_weights(self._n)
        total = sum((w * v for w, v in zip(weights, self._num) if v), Fraction(0))
        return hash(total / self._den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ----- reduction modulo p -----

    def mod_p(self, p: int, zeta_image: int, modulus_conductor: int) -> int:
        """Image in F_p when zeta_N maps to `zeta_image` (N = modulus_conductor)."""
        if modulus_conductor % self._n:
            raise ArithmeticDomainError(f"conductor {self._n} does not divide {modulus_conductor}")
        if self._den % p == 0:
            raise ArithmeticDomainError(f"denominator {self._den} vanishes mod {p}")
        z = pow(zeta_image, modulus_conductor // self._n, p)
        acc = 0
        zi = 1
        for c in self._num:
            if c:
                acc += c * zi
            zi = zi * z % p
        return acc * pow(self._den, p - 2, p) % p

    # ----- text -----

    def to_text(self) -> str:
        parts: List[str] = []
        for i, v in enumerate(self._num):
            if not v:
                continue
            c = Fraction(v, self._den)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                atom = f"E({self._n})" if i == 1 else f"E({self._n})^{i}"
                body = atom if mag == 1 else f"{mag}*{atom}"
            parts.append((sign, body))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"CycloNum({self.to_text()!r})"


# ============ Parsing ============

_TOKEN_RE = re.compile(r"\s*(?:(E)\s*\(|(\d+)|([-+*/^)]))")


def _tokenize(text: str) -> List[str]:
    tokens: List[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos} in {text!r}")
        tokens.append("E(" if m.group(1) else (m.group(2) or m.group(3)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def _parse_terms(text: str) -> List[Tuple[Fraction, int, int]]:
    """Parse into (coefficient, root order, exponent) triples; order 1 marks a constant."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty cyclotomic expression")
    terms: List[Tuple[Fraction, int, int]] = []
    i = 0

    def expect_int() -> int:
        nonlocal i
        if i >= len(tokens) or not tokens[i].isdigit():
            raise ParseError(f"integer expected in {text!r}")
        i += 1
        return int(tokens[i - 1])

    def parse_atom() -> Tuple[int, int]:
        nonlocal i
        i += 1  # 'E('
        n = expect_int()
        if i >= len(tokens) or tokens[i] != ")":
            raise ParseError(f"')' expected in {text!r}")
        i += 1
        k = 1
        if i < len(tokens) and tokens[i] == "^":
            i += 1
            neg = False
            if i < len(tokens) and tokens[i] == "-":
                neg = True
                i += 1
            k = -expect_int() if neg else expect_int()
        if n == 0:
            raise ParseError(f"E(0) is not a root of unity in {text!r}")
        return n, k

    sign = 1
    if tokens[0] in "+-":
        sign = -1 if tokens[0] == "-" else 1
        i = 1
    while True:
        if i >= len(tokens):
            raise ParseError(f"term expected in {text!r}")
        if tokens[i] == "E(":
            n, k = parse_atom()
            terms.append((Fraction(sign), n, k))
        else:
            num = expect_int()
            den = 1
            if i < len(tokens) and tokens[i] == "/":
                i += 1
                den = expect_int()
                if den == 0:
                    raise ParseError(f"zero denominator in {text!r}")
            coeff = Fraction(sign * num, den)
            if i < len(tokens) and tokens[i] == "*":
                i += 1
                if i >= len(tokens) or tokens[i] != "E(":
                    raise ParseError(f"'E(' expected after '*' in {text!r}")
                n, k = parse_atom()
                terms.append((coeff, n, k))
            else:
                terms.append((coeff, 1, 0))
        if i == len(tokens):
            break
        if tokens[i] not in "+-":
            raise ParseError(f"'+' or '-' expected, found {tokens[i]!r} in {text!r}")
        sign = -1 if tokens[i] == "-" else 1
        i += 1
    return terms


def cyclo_canonical(expr: str, conductor: Optional[int] = None) -> CycloNum:
    """
    Parse a cyclotomic expression into canonical form.

    Grammar: term (('+'|'-') term)*, term := rat | rat '*' atom | atom,
    atom := 'E(' n ')' ('^' k)?. The conductor is the lcm of the root
    orders used unless declared, in which case it must be a multiple.

    Example:
        >>> cyclo_canonical("E(4)^2")
        CycloNum('-1')
    """
    terms = _parse_terms(expr)
    inferred = lcm(*(n for _, n, _ in terms))
    if conductor is None:
        conductor = inferred
    elif conductor < 1:
        raise ParseError(f"conductor must be positive, got {conductor}")
    elif conductor % inferred:
        raise ParseError(f"expression {expr!r} needs conductor {inferred}, declared {conductor}")
    powers: Dict[int, Fraction] = {}
    for coeff, n, k in terms:
        e = (k * (conductor // n)) % conductor
        powers[e] = powers.get(e, Fraction(0)) + coeff
    return CycloNum.from_powers(conductor, powers)


def galois_conjugate(x: Scalar, k: int) -> Scalar:
    """Apply zeta_n -> zeta_n^k; rationals are fixed."""
    if isinstance(x, (int, Fraction)):
        return x
    return x.galois(k)


def as_cyclo(x: Scalar) -> CycloNum:
    return x if isinstance(x, CycloNum) else CycloNum.rational(x)


def conductor_of_values(values: Iterable[Scalar]) -> int:
    return lcm(*(v.conductor for v in values if isinstance(v, CycloNum) and not v.is_rational()))


def field_degree(values: Sequence[Scalar]) -> int:
    """Degree over Q of the field generated by `values`."""
    n = conductor_of_values(values)
    if n <= 2:
        return 1
    vals = [as_cyclo(v).embed(n) if not as_cyclo(v).is_rational() else as_cyclo(v) for v in values]
    fixing = [k for k in units(n) if all(v.galois(k) == v for v in vals)]
    return euler_phi(n) // len(fixing)


def class_sum(values: Sequence[CycloNum]) -> CycloNum:
    """Sum a list of cyclotomics, grouping by conductor to keep intermediate fields small."""
    by_conductor: Dict[int, CycloNum] = {}
    for v in values:
        v = as_cyclo(v)
        n = 1 if v.is_rational() else v.conductor
        by_conductor[n] = by_conductor[n] + v if n in by_conductor else v
    total = CycloNum.rational(0)
    for n in sorted(by_conductor):
        total = total + by_conductor[n]
    return total
