"""
Shared helpers for the case modules: group access and multiset arithmetic.

Group and table access goes through the run limits set by configure(),
so a run with a small max order skips the cases that need larger groups.
"""

import itertools
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from characters import CharacterTable, ClassFunction, TableCache, character_table
from errors import NotACharacterError
from exact import class_sum
from groups import ConjClassData, GroupModel, SubgroupClass, conjugacy_data, get_group, subgroup_lattice

KLEIN = "PSL(2,7)"

_limits = {"max_order": None, "cache": None}


def configure(max_order: Optional[int] = None, cache: Optional[TableCache] = None) -> None:
    """Set the group order cap and table cache used by the cases."""
    _limits["max_order"] = max_order
    _limits["cache"] = cache


def group(name: str) -> GroupModel:
    return get_group(name, max_order=_limits["max_order"])


def classes(name: str) -> ConjClassData:
    group(name)
    return _classes(name)


@lru_cache(maxsize=None)
def _classes(name: str) -> ConjClassData:
    return conjugacy_data(group(name))


def lattice(name: str) -> Tuple[SubgroupClass, ...]:
    group(name)
    return _lattice(name)


@lru_cache(maxsize=None)
def _lattice(name: str) -> Tuple[SubgroupClass, ...]:
    return tuple(subgroup_lattice(group(name), classes(name)))


def table(name: str) -> CharacterTable:
    return character_table(name, cache=_limits["cache"], max_order=_limits["max_order"])


def first_of_degree(T: CharacterTable, degree: int, faithful: bool = False) -> int:
    """Index of the first irreducible of the given degree."""
    for i in T.indices_of_degree(degree):
        if not faithful or T.character(i).is_faithful():
            return i
    raise NotACharacterError(f"{T.name} has no {'faithful ' if faithful else ''}irreducible of degree {degree}")


def sub_multisets(parts: Sequence[int], total: int) -> List[List[int]]:
    """Distinct sorted sub-multisets of `parts` with the given sum."""
    found = set()
    parts = sorted(parts)
    for r in range(len(parts) + 1):
        for combo in itertools.combinations(parts, r):
            if sum(combo) == total:
                found.add(combo)
    return [list(c) for c in sorted(found)]


def subset_sums(parts: Sequence[int]) -> List[int]:
    """All sums of sub-multisets, the empty one included."""
    sums = {0}
    for p in parts:
        sums |= {s + p for s in sums}
    return sorted(sums)


def remove_parts(parts: Sequence[int], removed: Sequence[int]) -> List[int]:
    rest = sorted(parts)
    for p in removed:
        rest.remove(p)
    return rest


def invariant_rank(chi: ClassFunction, class_map: ConjClassData, elements: Sequence[int]) -> int:
    """Multiplicity of the trivial character of a subgroup in chi restricted to it."""
    total = class_sum([chi[class_map.class_of[h]] for h in elements]) / len(elements)
    if not total.is_rational() or total.to_fraction().denominator != 1:
        raise NotACharacterError(f"restricted multiplicity {total} is not an integer")
    return total.to_int()
