"""
Smooth Fano 3-folds: the bundled (degree, rho, h12, family, index) table.

Only internal consistency is checked here; the classification itself is
input data.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Union

from config import FANO_TABLE_PATH
from errors import DataError, ParseError

logger = logging.getLogger(__name__)

NAMIKAWA_BASE = 20
MIN_SINGULAR_POINTS = 21
# g >= 6 and g not in {7, 8, 9}; the upper end comes from (-K)^3 <= 64
DEFAULT_CANDIDATE_GENERA = (6,) + tuple(range(10, 34))


@dataclass(frozen=True)
class FanoFamily:
    degree: int
    rho: int
    h12: int
    family_id: str
    index: int

    @property
    def genus(self) -> int:
        return self.degree // 2 + 1

    @property
    def sing_bound(self) -> int:
        """20 + h12 - rho."""
        return NAMIKAWA_BASE + self.h12 - self.rho


class FanoTable:
    """Deformation families, in file order."""

    def __init__(self, families: Iterable[FanoFamily], source: str = "<memory>"):
        self.families: List[FanoFamily] = list(families)
        self.source = source

    def __len__(self) -> int:
        return len(self.families)

    def of_degree(self, degree: int, index: Optional[int] = 1) -> List[FanoFamily]:
        return [
            f for f in self.families
            if f.degree == degree and (index is None or f.index == index)
        ]


def parse_fano_table(text: str, source: str = "<string>") -> FanoTable:
    """
    Parse rows "degree rho h12 family-id index"; '#' starts a comment.

    Raises:
        ParseError: malformed row
        DataError: a row violates degree parity, rho >= 1 or a duplicate id
    """
    families = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ParseError(f"{source}:{lineno}: expected 5 fields, got {len(parts)}")
        try:
            degree, rho, h12 = int(parts[0]), int(parts[1]), int(parts[2])
            index = int(parts[4])
        except ValueError:
            raise ParseError(f"{source}:{lineno}: non-integer field in {line!r}")
        fam = FanoFamily(degree, rho, h12, parts[3], index)
        if degree <= 0 or degree % 2:
            raise DataError(f"{source}:{lineno}: degree {degree} is not positive and even")
        if rho < 1 or h12 < 0 or not 1 <= index <= 4:
            raise DataError(f"{source}:{lineno}: invalid rho/h12/index in {line!r}")
        if fam.family_id in seen:
            raise DataError(f"{source}:{lineno}: duplicate family {fam.family_id}")
        seen.add(fam.family_id)
        families.append(fam)
    return FanoTable(families, source)


def load_fano_table(path: Union[str, Path] = FANO_TABLE_PATH) -> FanoTable:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise DataError(f"cannot read Fano table {path}: {e}")
    table = parse_fano_table(text, source=path.name)
    logger.info(f"✅ loaded {len(table)} Fano families from {path.name}")
    return table


def sing_bound(g: int, table: FanoTable, rho: Optional[int] = None, index: Optional[int] = 1) -> int:
    """
    Largest 20 + h12 - rho over families with (-K)^3 = 2g - 2.

    `rho` restricts to one Picard rank; `index=None` admits every Fano index.

    Raises:
        DataError: no family of that degree
    """
    fams = [f for f in table.of_degree(2 * g - 2, index) if rho is None or f.rho == rho]
    if not fams:
        raise DataError(f"no Fano family of degree {2 * g - 2} (index {index}, rho {rho}) in {table.source}")
    return max(f.sing_bound for f in fams)


def admits_21_points(g: int, table: FanoTable) -> bool:
    """Some index-1 family of genus g allows 21 or more nodes."""
    fams = table.of_degree(2 * g - 2)
    return any(f.sing_bound >= MIN_SINGULAR_POINTS for f in fams)


def admissible_gorenstein_genera(table: FanoTable, candidates: Iterable[int] = DEFAULT_CANDIDATE_GENERA) -> List[int]:
    """Candidate genera whose smoothing can carry 21 singular points."""
    return sorted(g for g in candidates if admits_21_points(g, table))


def max_sing_bound(table: FanoTable, min_degree: int = 10) -> int:
    """Largest 20 + h12 - rho over index-1 families of degree >= min_degree."""
    return max(f.sing_bound for f in table.families if f.index == 1 and f.degree >= min_degree)
