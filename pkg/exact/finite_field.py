"""
Small finite fields F_{p^k}.

Elements are encoded as integers 0..q-1 whose base-p digits are the
coefficients (constant first) of a polynomial in `u` reduced modulo a
fixed monic irreducible. Extension fields use log/exp tables; prime
fields use plain modular arithmetic.
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import GF as SympyGF, Poly, Symbol, isprime, primefactors

from errors import ArithmeticDomainError, ParseError

logger = logging.getLogger(__name__)

_U = Symbol("u")

# Fixed moduli, constant coefficient first.
DEFAULT_MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),     # u^3 + u + 1
    (3, 2): (1, 0, 1),        # u^2 + 1
}

MAX_EXTENSION_ORDER = 4096


def _digits(v: int, p: int, k: int) -> List[int]:
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _undigits(d: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(d):
        v = v * p + (c % p)
    return v


def _find_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """First monic irreducible of degree k over F_p in encoding order."""
    for tail in range(p ** k):
        coeffs = _digits(tail, p, k) + [1]
        poly = Poly(list(reversed(coeffs)), _U, domain=SympyGF(p))
        if poly.is_irreducible:
            return tuple(coeffs)
    raise ArithmeticDomainError(f"no irreducible polynomial of degree {k} over F_{p}")


class GF:
    """The field F_{p^k} with fixed modulus."""

    def __init__(self, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None):
        if not isprime(p):
            raise ArithmeticDomainError(f"{p} is not prime")
        if k < 1:
            raise ArithmeticDomainError(f"extension degree must be positive, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        if k == 1:
            self.modulus: Tuple[int, ...] = (0, 1)
            self._exp: List[int] = []
            self._log: List[int] = []
            return
        if self.q > MAX_EXTENSION_ORDER:
            raise ArithmeticDomainError(f"F_{p}^{k} exceeds the table limit {MAX_EXTENSION_ORDER}")
        self.modulus = tuple(modulus) if modulus else DEFAULT_MODULI.get((p, k)) or _find_irreducible(p, k)
        self._build_tables()

    # ----- table construction -----

    def _poly_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = _digits(a, p, k), _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self.modulus
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k + 1):
                    prod[i - k + j] -= c * mod[j]
        return _undigits(prod[:k], p)

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = primefactors(order)
        for g in range(2, q):
            powers = [1]
            x = 1
            for _ in range(order - 1):
                x = self._poly_mul(x, g)
                powers.append(x)
            if len(set(powers)) == order and all(powers[order // f] != 1 for f in factors):
                self._exp = powers + powers
                self._log = [0] * q
                for i, v in enumerate(powers):
                    self._log[v] = i
                logger.debug("F_%d: primitive element %d", q, g)
                return
        raise ArithmeticDomainError(f"no primitive element found for F_{q}")

    # ----- arithmetic on encodings -----

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return _undigits([-d for d in _digits(a, self.p, self.k)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ArithmeticDomainError(f"division by zero in F_{self.q}")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if self.k == 1:
            if a == 0:
                return 0 if e > 0 else 1
            return pow(a, e % (self.p - 1), self.p)
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n (prime subfield)."""
        return n % self.p

    def primitive_element(self) -> int:
        if self.k > 1:
            return self._exp[1]
        from sympy import primitive_root
        return int(primitive_root(self.p))

    # ----- elements -----

    def __call__(self, value: int) -> "FFElem":
        return FFElem(self, value)

    def elements(self) -> List["FFElem"]:
        return [FFElem(self, v) for v in range(self.q)]

    def parse(self, text: str) -> int:
        """Encode a polynomial in `u` such as "u^2+1" or "3*u+2"."""
        text = text.replace(" ", "")
        if not text:
            raise ParseError("empty finite-field element")
        coeffs = [0] * self.k
        for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
            s = -1 if sign == "-" else 1
            m = re.fullmatch(r"(?:(\d+)\*?)?(u(?:\^(\d+))?)?", body)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ParseError(f"bad finite-field term {body!r} in {text!r}")
            c = int(m.group(1)) if m.group(1) is not None else 1
            e = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
            if e >= self.k:
                # reduce u^e through the modulus by repeated multiplication
                value = self.pow(self._u(), e)
                for i, d in enumerate(_digits(value, self.p, self.k)):
                    coeffs[i] += s * c * d
            else:
                coeffs[e] += s * c
        return _undigits(coeffs, self.p)

    def _u(self) -> int:
        return self.p if self.k > 1 else 0

    def format(self, a: int) -> str:
        parts = []
        for e, c in reversed(list(enumerate(_digits(a, self.p, self.k)))):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                atom = "u" if e == 1 else f"u^{e}"
                parts.append(atom if c == 1 else f"{c}*{atom}")
        return "+".join(parts) if parts else "0"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}, {self.k})"


@lru_cache(maxsize=None)
def get_field(p: int, k: int = 1) -> GF:
    return GF(p, k)


class FFElem:
    """An element of a finite field, interoperating with Python ints."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value % field.q if field.k == 1 else value

    def _other(self, other) -> Optional[int]:
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise ArithmeticDomainError(f"mixed fields {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FFElem(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FFElem(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FFElem(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FFElem(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FFElem(self.field, self.field.mul(self.value, self.field.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else FFElem(self.field, self.field.mul(o, self.field.inv(self.value)))

    def inverse(self) -> "FFElem":
        return FFElem(self.field, self.field.inv(self.value))

    def __pow__(self, e: int):
        return FFElem(self.field, self.field.pow(self.value, e))

    def __eq__(self, other) -> bool:
        o = self._other(other) if isinstance(other, (int, FFElem)) else None
        return o is not None and o == self.value

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FFElem({self.field.p}:{self.field.k}:{self.field.format(self.value)})"


def parse_ff(text: str) -> FFElem:
    """Parse a "p:k:poly" entry, e.g. "2:3:u^2+1"."""
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise ParseError(f"finite-field entry must look like p:k:poly, got {text!r}")
    try:
        p, k = int(parts[0]), int(parts[1])
    except ValueError as e:
        raise ParseError(f"bad field spec in {text!r}") from e
    field = get_field(p, k)
    return FFElem(field, field.parse(parts[2]))
