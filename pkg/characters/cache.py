"""
On-disk cache of computed character tables.

Entries are ctab files keyed by (group name, sha256 of the generator
text). A cached table goes through the same verification gate as any
loaded table; entries that fail it are deleted and recomputed.
"""

import logging
import re
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from characters.ctab import dump_table, load_table
from characters.dixon import dixon_table
from characters.table import CharacterTable
from config import CACHE_DIR
from errors import DataError, ParseError, TableError
from groups.classes import conjugacy_data
from groups.library import get_group, group_spec

logger = logging.getLogger(__name__)

_SAFE_RE = re.compile(r"[^A-Za-z0-9]+")


class TableCache:
    """
    Directory of cached tables.

    A failed write disables the cache for the rest of the run; the
    computation itself is never affected.
    """

    def __init__(self, directory: Optional[Union[str, Path]] = CACHE_DIR):
        self.directory = Path(directory) if directory else None
        self.enabled = self.directory is not None
        self.hits = 0
        self.discarded = 0

    def path_for(self, name: str, generator_hash: str) -> Path:
        stem = _SAFE_RE.sub("_", name).strip("_") or "group"
        return self.directory / f"{stem}-{generator_hash[:16]}.ctab"

    def get(self, name: str, generator_hash: str) -> Optional[CharacterTable]:
        if not self.enabled:
            return None
        path = self.path_for(name, generator_hash)
        if not path.is_file():
            return None
        try:
            table = load_table(path)
        except (TableError, ParseError, DataError) as e:
            logger.warning(f"⚠️ discarding cached table {path.name}: {e}")
            self.discarded += 1
            try:
                path.unlink()
            except OSError as err:
                logger.warning(f"⚠️ cannot delete cached table {path}: {err}")
            return None
        if table.name != name:
            logger.warning(f"⚠️ discarding cached table {path.name}: it is for {table.name}")
            self.discarded += 1
            return None
        self.hits += 1
        return table

    def put(self, table: CharacterTable, generator_hash: str) -> None:
        if not self.enabled:
            return
        path = self.path_for(table.name, generator_hash)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(dump_table(table))
        except OSError as e:
            logger.warning(f"⚠️ table cache disabled, cannot write {path}: {e}")
            self.enabled = False


_memo: Dict[Tuple[str, str], CharacterTable] = {}


def character_table(
    name: str,
    cache: Optional[TableCache] = None,
    max_order: Optional[int] = None,
) -> CharacterTable:
    """
    Verified character table of a catalogue group.

    Looks in the process memo, then the disk cache, then runs Dixon on the
    materialized group and stores the result.

    Raises:
        ConfigError: unknown group
        CapExceeded: group order above max_order
    """
    spec = group_spec(name)
    key = (spec.name, spec.generator_hash)
    G = get_group(spec.name, max_order=max_order)
    if key in _memo:
        return _memo[key]
    table = cache.get(spec.name, spec.generator_hash) if cache else None
    if table is None:
        table = dixon_table(G, conjugacy_data(G))
        if cache:
            cache.put(table, spec.generator_hash)
    _memo[key] = table
    return table


def clear_memo() -> None:
    _memo.clear()
