"""
Ordinary character theory: tables, class functions, Dixon's method, ctab files.
"""

from characters.table import (
    CharacterTable,
    ClassFunction,
    fs_indicator,
    decompose,
    degree_split,
    sym_power_char,
    molien_dim,
    molien_series,
    realdim,
    min_faithful_dim,
    char_field_rational_dim,
    min_nontrivial_rational_dim,
    restrict,
)
from characters.dixon import dixon_table, dixon_prime
from characters.ctab import parse_table, load_table, dump_table, render_table
from characters.cache import TableCache, character_table

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "fs_indicator",
    "decompose",
    "degree_split",
    "sym_power_char",
    "molien_dim",
    "molien_series",
    "realdim",
    "min_faithful_dim",
    "char_field_rational_dim",
    "min_nontrivial_rational_dim",
    "restrict",
    "dixon_table",
    "dixon_prime",
    "parse_table",
    "load_table",
    "dump_table",
    "render_table",
    "TableCache",
    "character_table",
]
