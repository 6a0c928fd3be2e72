"""
Text format for character tables.

    group PSL(2,7) order 168 classes 6
    sizes: 1 21 56 42 24 24
    orders: 1 2 3 4 7 7
    pow 2: 0 0 2 1 4 5
    chi: 1 | 1 | 1 | 1 | 1 | 1

Values use the cyclotomic expression grammar. A loaded table is only
returned after CharacterTable.verify() accepts it.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Union

from characters.table import CharacterTable
from errors import DataError, ParseError
from exact.cyclotomic import CycloNum, cyclo_canonical

logger = logging.getLogger(__name__)

_HEADER_RE = re.compile(r"group\s+(\S.*?)\s+order\s+(\d+)\s+classes\s+(\d+)$")


def _ints(text: str, source: str, line: int) -> List[int]:
    try:
        return [int(x) for x in text.split()]
    except ValueError as e:
        raise ParseError(f"expected integers, got {text!r}", source=source, line=line) from e


def parse_table(text: str, source: str = "<string>") -> CharacterTable:
    """Parse ctab text without verifying it."""
    name: Optional[str] = None
    order = count = 0
    sizes: List[int] = []
    orders: List[int] = []
    power_maps: Dict[int, List[int]] = {}
    rows: List[List[CycloNum]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("group "):
            m = _HEADER_RE.match(line)
            if not m:
                raise ParseError(f"bad header {line!r}", source=source, line=lineno)
            name, order, count = m.group(1), int(m.group(2)), int(m.group(3))
        elif line.startswith("sizes:"):
            sizes = _ints(line[6:], source, lineno)
        elif line.startswith("orders:"):
            orders = _ints(line[7:], source, lineno)
        elif line.startswith("pow "):
            head, _, body = line.partition(":")
            try:
                q = int(head[4:])
            except ValueError as e:
                raise ParseError(f"bad power map label {head!r}", source=source, line=lineno) from e
            power_maps[q] = _ints(body, source, lineno)
        elif line.startswith("chi:"):
            try:
                rows.append([cyclo_canonical(v) for v in line[4:].split("|")])
            except ParseError as e:
                raise ParseError(str(e), source=source, line=lineno) from e
        else:
            raise ParseError(f"unrecognized line {line!r}", source=source, line=lineno)
    if name is None:
        raise ParseError("missing 'group' header", source=source)
    if len(sizes) != count or len(orders) != count:
        raise ParseError(f"expected {count} sizes and orders", source=source)
    if sum(sizes) != order:
        raise ParseError(f"class sizes sum to {sum(sizes)}, header says {order}", source=source)
    for q, pm in power_maps.items():
        if len(pm) != count or any(not 0 <= c < count for c in pm):
            raise ParseError(f"power map {q} is not a map on {count} classes", source=source)
    return CharacterTable(
        name=name,
        sizes=sizes,
        orders=orders,
        power_maps=power_maps,
        irreducibles=rows,
        provenance="file",
    )


def load_table(path: Union[str, Path]) -> CharacterTable:
    """
    Load and verify a ctab file.

    Raises:
        DataError: file cannot be read
        ParseError: malformed content
        TableError: content parses but violates a table relation
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise DataError(f"cannot read character table {path}: {e}") from e
    table = parse_table(text, source=str(path)).verify()
    logger.info(f"✅ loaded {table.name} from {path.name}")
    return table


def dump_table(table: CharacterTable) -> str:
    """Render a table in the ctab format; parse_table inverts it."""
    lines = [
        f"group {table.name} order {table.order} classes {table.class_count}",
        "sizes: " + " ".join(map(str, table.sizes)),
        "orders: " + " ".join(map(str, table.orders)),
    ]
    for q in sorted(table.power_maps):
        lines.append(f"pow {q}: " + " ".join(map(str, table.power_maps[q])))
    for row in table.irreducibles:
        lines.append("chi: " + " | ".join(v.to_text() for v in row))
    return "\n".join(lines) + "\n"


def render_table(table: CharacterTable) -> str:
    """Fixed-width rendering for the command line."""
    seen: Dict[int, int] = {}
    labels = []
    for o in table.orders:
        labels.append(f"{o}{chr(97 + seen.get(o, 0))}")
        seen[o] = seen.get(o, 0) + 1
    header = ["", *labels]
    body = [["|C|", *map(str, table.sizes)]]
    for i, row in enumerate(table.irreducibles):
        body.append([f"X.{i + 1}", *(v.to_text() for v in row)])
    widths = [max(len(r[c]) for r in [header, *body]) for c in range(len(header))]
    out = [f"{table.name}  (order {table.order}, {table.class_count} classes, {table.provenance})"]
    for r in [header, *body]:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return "\n".join(out)
