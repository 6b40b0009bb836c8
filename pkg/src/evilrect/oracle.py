"""Brute-force ground truth: filter all of S_n by the forbidden pattern sets."""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from . import _scan
from .enumeration import CountTable
from .perm import AI_PATTERNS, EVIL_PATTERNS, PATTERNS_123_132, RECT_PATTERNS, Perm, descents, recoils

MAX_N = 10


class PermClass(enum.Enum):
    EVIL = "evil"
    RECT = "rect"
    AI = "ai"
    AVOID_123_132 = "avoid-123-132"


CLASS_PATTERNS = {
    PermClass.EVIL: EVIL_PATTERNS,
    PermClass.RECT: RECT_PATTERNS,
    PermClass.AI: AI_PATTERNS,
    PermClass.AVOID_123_132: PATTERNS_123_132,
}


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ValueError(f"brute force is guarded to 0 <= n <= {MAX_N}, got {n}")


@lru_cache(maxsize=4)
def all_perms(n: int) -> np.ndarray:
    """S_n in lexicographic order as an (n!, n) array."""
    _check_n(n)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int64)


@lru_cache(maxsize=32)
def _members(n: int, cls: PermClass) -> tuple[Perm, ...]:
    rows = all_perms(n)
    pats = sorted(CLASS_PATTERNS[cls])
    k = len(pats[0])
    if n < k:
        keep = rows
    else:
        keep = rows[_scan.batch_avoids(rows, pats, k)]
    return tuple(tuple(int(v) for v in r) for r in keep)


def enumerate_class(n: int, cls: PermClass) -> Iterator[Perm]:
    """Every member of the class in S_n, in lexicographic order."""
    _check_n(n)
    yield from _members(n, cls)


def class_size(n: int, cls: PermClass) -> int:
    _check_n(n)
    return len(_members(n, cls))


def bucket_counts(n: int, cls: PermClass, statistic: str = "recoils") -> CountTable:
    """Class members of size ``n`` bucketed by number of recoils (or descents)."""
    stat = {"recoils": recoils, "descents": descents}[statistic]
    table = CountTable()
    counts: dict[int, int] = {}
    for p in enumerate_class(n, cls):
        k = len(stat(p))
        counts[k] = counts.get(k, 0) + 1
    for k in sorted(counts):
        table.set(n, k, counts[k], "brute-force")
    return table
