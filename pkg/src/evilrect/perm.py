"""Permutations in one-line notation and the generic insertion/shift operators.

Permutations are plain tuples of ints holding exactly ``1..n``; positions and
values are 1-indexed in every public function, matching one-line notation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import _scan

Perm = tuple[int, ...]


class InvalidPermutation(ValueError):
    """Raised for sequences that are not a permutation of 1..n."""


EVIL_PATTERNS: frozenset[Perm] = frozenset({(2, 4, 1, 3), (4, 1, 3, 2), (4, 2, 1, 3), (3, 2, 1, 4)})
RECT_PATTERNS: frozenset[Perm] = frozenset({(2, 4, 1, 3), (2, 4, 3, 1), (4, 2, 1, 3), (4, 2, 3, 1)})
AI_PATTERNS: frozenset[Perm] = frozenset({(4, 3, 2, 1), (4, 3, 1, 2), (3, 4, 2, 1), (3, 4, 1, 2)})
PATTERNS_123_132: frozenset[Perm] = frozenset({(1, 2, 3), (1, 3, 2)})


@dataclass(frozen=True)
class SandwichParams:
    a: int
    b: int


def as_perm(values: Iterable[int]) -> Perm:
    """Validate and return ``values`` as a permutation tuple."""
    p = tuple(int(v) for v in values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidPermutation(f"not a permutation of 1..{len(p)}: {list(p)}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse ``"3 2 4 1"``, ``"3,2,4,1"``, ``"[3, 2, 4, 1]"`` or compact ``"3241"``."""
    body = text.strip().strip("[]()")
    if not body:
        return ()
    tokens = [t for t in re.split(r"[\s,]+", body) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        if not tokens[0].isdigit() or len(tokens[0]) > 9:
            raise InvalidPermutation(f"cannot parse permutation {text!r}")
        tokens = list(tokens[0])
    try:
        return as_perm(int(t) for t in tokens)
    except ValueError as exc:
        raise InvalidPermutation(f"cannot parse permutation {text!r}") from exc


def format_perm(p: Sequence[int]) -> str:
    return " ".join(str(v) for v in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_identity(p: Sequence[int]) -> bool:
    return all(v == i for i, v in enumerate(p, 1))


def reduce(seq: Sequence[int]) -> Perm:
    """The permutation order-isomorphic to a sequence of distinct numbers."""
    if len(set(seq)) != len(seq):
        raise InvalidPermutation(f"entries are not distinct: {list(seq)}")
    rank = {v: r for r, v in enumerate(sorted(seq), 1)}
    return tuple(rank[v] for v in seq)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


def compose(t1: Sequence[int], t2: Sequence[int]) -> Perm:
    """``(t1 o t2)_i = t1[t2_i]``."""
    if len(t1) != len(t2):
        raise InvalidPermutation(f"size mismatch: {len(t1)} vs {len(t2)}")
    return tuple(t1[v - 1] for v in t2)


def recoils(p: Sequence[int]) -> frozenset[int]:
    """Values ``i`` that occur after ``i + 1``."""
    pos = inverse(p)
    return frozenset(i for i in range(1, len(p)) if pos[i - 1] > pos[i])


def descents(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def lehmer_code(p: Sequence[int]) -> tuple[int, ...]:
    n = len(p)
    return tuple(sum(1 for j in range(i + 1, n) if p[j] < p[i]) for i in range(n))


def from_lehmer_code(code: Sequence[int]) -> Perm:
    n = len(code)
    avail = list(range(1, n + 1))
    out = []
    for i, c in enumerate(code):
        if not 0 <= c < n - i:
            raise InvalidPermutation(f"not a Lehmer code: {list(code)}")
        out.append(avail.pop(c))
    return tuple(out)


def insert_rho(p: Sequence[int], i: int, j: int) -> Perm:
    """Insert value ``i`` at position ``j``, bumping every value ``>= i``."""
    n = len(p)
    if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        raise ValueError(f"rho_{{{i},{j}}} undefined on S_{n}")
    bumped = [v + 1 if v >= i else v for v in p]
    bumped.insert(j - 1, i)
    return tuple(bumped)


def delete_at(p: Sequence[int], j: int) -> Perm:
    """Inverse of ``insert_rho``: drop position ``j`` and close the value gap."""
    v = p[j - 1]
    return tuple(x - 1 if x > v else x for k, x in enumerate(p, 1) if k != j)


def shift_gamma(p: Sequence[int], a: int, b: int) -> Perm:
    """Move the entry at position ``a`` to position ``b`` (requires ``b < a``)."""
    if not 1 <= b < a <= len(p):
        raise ValueError(f"gamma_{{{a},{b}}} undefined on S_{len(p)}")
    lst = list(p)
    lst.insert(b - 1, lst.pop(a - 1))
    return tuple(lst)


def unshift_gamma(p: Sequence[int], a: int, b: int) -> Perm:
    """Inverse of ``shift_gamma(., a, b)``."""
    if not 1 <= b < a <= len(p):
        raise ValueError(f"gamma_{{{a},{b}}} undefined on S_{len(p)}")
    lst = list(p)
    lst.insert(a - 1, lst.pop(b - 1))
    return tuple(lst)


def sandwich_params(p: Sequence[int]) -> SandwichParams | None:
    """``(a, b)`` when ``p`` is ``1..a`` then anything then ``a+1..a+b``.

    Identities give None. For a non-identity the parameters are forced: ``a``
    is the length of the fixed prefix and ``a + 1`` must open the final run.
    """
    n = len(p)
    a = 0
    while a < n and p[a] == a + 1:
        a += 1
    if a == n:
        return None
    b = n - p.index(a + 1)
    if all(p[n - b + j] == a + 1 + j for j in range(b)):
        return SandwichParams(a, b)
    return None


def find_pattern(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> tuple[int, ...] | None:
    """1-based positions of some occurrence of any of ``patterns``, or None.

    All patterns must share one length. Lengths 3 and 4 run through the
    compiled subset scan; shorter ones fall back to ``itertools``.
    """
    pats = [tuple(q) for q in patterns]
    if not pats:
        return None
    k = len(pats[0])
    if any(len(q) != k for q in pats):
        raise ValueError("patterns must have equal length")
    if len(p) < k:
        return None
    if k in (3, 4):
        hit = _scan.find_occurrence(p, pats, k)
        return None if hit is None else tuple(i + 1 for i in hit)
    wanted = set(pats)
    for idx in combinations(range(len(p)), k):
        if reduce([p[i] for i in idx]) in wanted:
            return tuple(i + 1 for i in idx)
    return None


def contains_pattern(p: Sequence[int], sigma: Sequence[int]) -> bool:
    return find_pattern(p, [sigma]) is not None


def avoids_all(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    by_len: dict[int, list] = {}
    for q in patterns:
        by_len.setdefault(len(q), []).append(tuple(q))
    return all(find_pattern(p, group) is None for group in by_len.values())


def is_evil_avoiding(p: Sequence[int]) -> bool:
    return avoids_all(p, EVIL_PATTERNS)


def is_rectangular(p: Sequence[int]) -> bool:
    return avoids_all(p, RECT_PATTERNS)
