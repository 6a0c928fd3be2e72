"""
Group catalogue: bundled .grp files plus code-built families.

A .grp file is line oriented:

    name PSL(2,7)
    domain perm 8                (or: domain matrix 2 ff 2:3 / domain matrix 3 cyclo 7)
    order 168
    gen [1,2,3,4,5,6,0,7]

Every generator set is closed and checked against the declared order;
relations are never assumed.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from config import GROUP_DATA_DIR, MAX_GROUP_ORDER
from errors import CapExceeded, ConfigError, DataError, ParseError
from exact.cyclotomic import cyclo_canonical
from exact.finite_field import get_field, parse_ff
from groups.elements import CycloMatrixOps, FieldMatrixOps, PermOps, PrimeMatrixOps
from groups.model import GroupModel, generate_group

logger = logging.getLogger(__name__)


@dataclass
class GroupSpec:
    """
    Recipe for a catalogue group.

    Attributes:
        name: Catalogue name, e.g. "SL(2,8)"
        order: Declared order, checked on build
        source: File path or "builtin"
        generator_text: Canonical text of the generators (hashed for caching)
        factory: Returns (ops, generators)
    """

    name: str
    order: int
    source: str
    generator_text: str
    factory: Callable[[], Any] = field(repr=False)

    @property
    def generator_hash(self) -> str:
        return hashlib.sha256(self.generator_text.encode()).hexdigest()

    def build(self) -> GroupModel:
        ops, gens = self.factory()
        return generate_group(gens, ops, expected_order=self.order, name=self.name)


# ============ .grp parsing ============

def _split_entries(body: str, source: str, line: int) -> List[str]:
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("generator must be a bracketed list", source=source, line=line)
    return [e.strip() for e in body[1:-1].split(",") if e.strip()]


def _matrix_factory(dim: int, field_kind: str, field_spec: str, raw: List[List[str]], source: str):
    if field_kind == "ff":
        try:
            p, k = (int(x) for x in field_spec.split(":"))
        except ValueError as e:
            raise ParseError(f"bad field spec {field_spec!r}", source=source) from e

        def entry(text: str) -> int:
            if ":" in text:
                elem = parse_ff(text)
                if (elem.field.p, elem.field.k) != (p, k):
                    raise ParseError(f"entry {text!r} not in F_{p}^{k}", source=source)
                return elem.value
            return int(text) % p

        ops = PrimeMatrixOps(dim, p) if k == 1 else FieldMatrixOps(dim, get_field(p, k))
        gens = [[entry(t) for t in g] for g in raw]
        return lambda: (ops, gens)
    if field_kind == "cyclo":
        n = int(field_spec)
        ops = CycloMatrixOps(dim, n)
        gens = [[cyclo_canonical(t) for t in g] for g in raw]
        return lambda: (ops, gens)
    raise ParseError(f"unknown matrix field {field_kind!r}", source=source)


def load_group_file(path: Path) -> GroupSpec:
    """Parse a .grp file into a GroupSpec (generators are not closed yet)."""
    source = str(path)
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as e:
        raise DataError(f"cannot read group file {source}: {e}") from e
    name: Optional[str] = None
    order: Optional[int] = None
    domain: Optional[List[str]] = None
    raw: List[List[str]] = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key == "name":
            name = rest.strip()
        elif key == "order":
            if not rest.strip().isdigit():
                raise ParseError(f"bad order {rest.strip()!r}", source=source, line=lineno)
            order = int(rest)
        elif key == "domain":
            domain = rest.split()
        elif key == "gen":
            raw.append(_split_entries(rest, source, lineno))
        else:
            raise ParseError(f"unknown key {key!r}", source=source, line=lineno)
    if name is None or order is None or domain is None or not raw:
        raise ParseError("group file needs name, domain, order and at least one gen", source=source)

    if domain[0] == "perm":
        degree = int(domain[1])
        ops = PermOps(degree)
        gens = [[int(x) for x in g] for g in raw]
        factory = lambda: (ops, gens)  # noqa: E731
    elif domain[0] == "matrix" and len(domain) == 4:
        factory = _matrix_factory(int(domain[1]), domain[2], domain[3], raw, source)
    else:
        raise ParseError(f"bad domain line {' '.join(domain)!r}", source=source)
    text = json.dumps({"domain": domain, "gens": raw}, sort_keys=True, separators=(",", ":"))
    return GroupSpec(name=name, order=order, source=source, generator_text=text, factory=factory)


# ============ code-built families ============

def _perm_spec(name: str, degree: int, gens: Sequence[Sequence[int]], order: int) -> GroupSpec:
    gens = [list(g) for g in gens]
    text = json.dumps({"domain": ["perm", degree], "gens": gens}, separators=(",", ":"))
    ops = PermOps(degree)
    return GroupSpec(name=name, order=order, source="builtin", generator_text=text, factory=lambda: (ops, gens))


def _cycle(degree: int, points: Sequence[int]) -> List[int]:
    img = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        img[a] = b
    return img


def cyclic_spec(n: int) -> GroupSpec:
    return _perm_spec(f"C{n}", max(n, 1), [_cycle(n, range(n)) if n > 1 else [0]], n)


def dihedral_spec(n: int) -> GroupSpec:
    """Symmetries of the n-gon, order 2n."""
    rot = _cycle(n, range(n))
    refl = [(-i) % n for i in range(n)]
    return _perm_spec(f"D{n}", n, [rot, refl], 2 * n)


def symmetric_spec(n: int) -> GroupSpec:
    if n < 2:
        return _perm_spec("S1", 1, [[0]], 1)
    return _perm_spec(f"S{n}", n, [_cycle(n, [0, 1]), _cycle(n, range(n))], math.factorial(n))


def alternating_spec(n: int) -> GroupSpec:
    if n < 3:
        return _perm_spec(f"A{n}", max(n, 1), [list(range(max(n, 1)))], 1)
    three = _cycle(n, [0, 1, 2])
    long = _cycle(n, range(n)) if n % 2 else _cycle(n, range(1, n))
    return _perm_spec(f"A{n}", n, [three, long] if n > 3 else [three], math.factorial(n) // 2)


# 2x2 Pauli matrices over F_5, with i = 2
_P5 = 5
_PAULI = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.int64),
    "X": np.array([[0, 1], [1, 0]], dtype=np.int64),
    "Y": np.array([[0, 3], [2, 0]], dtype=np.int64),
    "Z": np.array([[1, 0], [0, 4]], dtype=np.int64),
}
_CLIFFORD_WORDS = ["XII", "YII", "ZXI", "ZYI", "ZZX", "ZZY", "ZZZ"]


def clifford_gammas() -> List[np.ndarray]:
    """Seven pairwise anticommuting 8x8 involutions over F_5."""
    out = []
    for word in _CLIFFORD_WORDS:
        m = np.array([[1]], dtype=np.int64)
        for letter in word:
            m = np.kron(m, _PAULI[letter]) % _P5
        out.append(m)
    return out


def double_cover_a7_spec() -> GroupSpec:
    """
    2.A7 inside the Pin group of the seven Clifford generators.

    The transposition (j k) lifts to (g_j - g_k)/sqrt(2); the 3-cycle uses two
    transpositions (scale 1/2 = 3) and the 7-cycle six (scale 1/8 = 2).
    """
    g = clifford_gammas()
    diff = [(g[k] - g[k + 1]) % _P5 for k in range(6)]
    three = (diff[0] @ diff[1] * 3) % _P5
    seven = np.eye(8, dtype=np.int64)
    for d in diff:
        seven = (seven @ d) % _P5
    seven = (seven * 2) % _P5
    gens = [[int(x) for x in m.flatten()] for m in (three, seven)]
    ops = PrimeMatrixOps(8, _P5)
    text = json.dumps({"domain": ["matrix", 8, "ff", "5:1"], "gens": gens}, separators=(",", ":"))
    return GroupSpec(name="2.A7", order=5040, source="builtin", generator_text=text, factory=lambda: (ops, gens))


# ============ catalogue ============

@lru_cache(maxsize=1)
def catalogue() -> Dict[str, GroupSpec]:
    """All named groups: bundled files first, then builtins."""
    specs: Dict[str, GroupSpec] = {}
    if not GROUP_DATA_DIR.is_dir():
        raise DataError(f"group data directory missing: {GROUP_DATA_DIR}")
    for path in sorted(GROUP_DATA_DIR.glob("*.grp")):
        spec = load_group_file(path)
        specs[spec.name] = spec
    for spec in (double_cover_a7_spec(), symmetric_spec(4), alternating_spec(4), alternating_spec(5)):
        specs.setdefault(spec.name, spec)
    logger.info(f"✅ catalogue: {len(specs)} groups")
    return specs


def group_spec(name: str) -> GroupSpec:
    specs = catalogue()
    if name in specs:
        return specs[name]
    for builder, prefix in ((cyclic_spec, "C"), (dihedral_spec, "D"), (symmetric_spec, "S"), (alternating_spec, "A")):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return builder(int(name[len(prefix):]))
    raise ConfigError(f"unknown group {name!r}; known: {', '.join(sorted(specs))}")


@lru_cache(maxsize=None)
def _built(name: str) -> GroupModel:
    return group_spec(name).build()


def get_group(name: str, max_order: Optional[int] = None) -> GroupModel:
    """
    Materialize a catalogue group (memoized per process).

    Raises:
        ConfigError: unknown name
        CapExceeded: declared order above max_order
    """
    limit = MAX_GROUP_ORDER if max_order is None else max_order
    spec = group_spec(name)
    if spec.order > limit:
        raise CapExceeded(f"{name} has order {spec.order} > max order {limit}", undecided=[name])
    return _built(name)
