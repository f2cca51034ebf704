"""Bit-mask encodings of vertex subsets.

Vertex sets over a ground set of at most 64 points are stored as Python
integers with bit i standing for vertex i.  Line families are then plain
sets of ints, which makes deduplication O(1) per line during the large
enumerations in the search module.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def pair_list(n: int) -> list[tuple[int, int]]:
    """Unordered pairs of range(n) in lexicographic order."""
    return list(combinations(range(n), 2))


def triple_list(n: int) -> list[tuple[int, int, int]]:
    """Unordered triples of range(n) in lexicographic order."""
    return list(combinations(range(n), 3))


def triple_index(n: int) -> dict[tuple[int, int, int], int]:
    return {t: i for i, t in enumerate(triple_list(n))}
