"""Bitmask helpers. Subsets of {0..n-1} are Python ints internally."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def to_mask(items: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for e in items:
        if not isinstance(e, (int,)) or e < 0 or (n is not None and e >= n):
            raise ValueError(f"element {e!r} is not in the ground set 0..{n - 1 if n is not None else '?'}")
        mask |= 1 << e
    return mask


def elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(elements(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def set_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical order: by size, then lexicographically on sorted members."""
    return (mask.bit_count(), tuple(elements(mask)))


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in combinations(elements(mask), k):
        sub = 0
        for e in combo:
            sub |= 1 << e
        yield sub


def full(n: int) -> int:
    return (1 << n) - 1
