"""1-almost-increasing permutations and their rho-word codec.

Words reuse the rect letters: ``1 = rho_{1,1}``, ``2 = rho_{2,1}``,
``u = rho_{2,2}``, ``d = rho_{1,2}``. Under that spelling the language of
valid words is exactly the rect language.
"""

from __future__ import annotations

from typing import Sequence

from .langs import InvalidWord, is_valid_rect_word
from .perm import AI_PATTERNS, Perm, avoids_all, delete_at, insert_rho
from . import rect

# letter -> (value, position) of the insertion
RHO = {"1": (1, 1), "2": (2, 1), "u": (2, 2), "d": (1, 2)}


class NotAlmostIncreasing(ValueError):
    pass


def by_thresholds(p: Sequence[int]) -> bool:
    """For every ``i`` at most one of ``p_1..p_i`` exceeds ``i``."""
    big = 0
    seen = set()
    for i, v in enumerate(p, 1):
        # big counts entries > i among p_1..p_i; value i stops counting once it has appeared
        if v > i:
            big += 1
        seen.add(v)
        if i in seen and i != v:
            big -= 1
        if big > 1:
            return False
    return True


def is_almost_increasing(p: Sequence[int]) -> bool:
    by_patterns = avoids_all(p, AI_PATTERNS)
    assert by_patterns == by_thresholds(p), f"characterizations disagree on {list(p)}"
    return by_patterns


def decode_ai(word: str) -> Perm:
    if not is_valid_rect_word(word):
        raise InvalidWord(f"not an ai word: {word!r}")
    p: Perm = ()
    for ch in reversed(word):
        p = insert_rho(p, *RHO[ch])
    return p


def _peel(p: Perm) -> tuple[str, Perm]:
    first = p[0]
    second = p[1] if len(p) > 1 else None
    if first == 1:
        return "1", delete_at(p, 1)
    if first == 2 and second == 1:
        return "d", delete_at(p, 2)
    if first == 2:
        return "2", delete_at(p, 1)
    if second == 1:
        return "d", delete_at(p, 2)
    if second == 2:
        return "u", delete_at(p, 2)
    raise NotAlmostIncreasing(f"neither of the first two entries of {list(p)} is 1 or 2")


def encode_ai(p: Sequence[int]) -> str:
    p = tuple(p)
    if not p:
        raise ValueError("e_0 has no word (words have positive length)")
    if not is_almost_increasing(p):
        raise NotAlmostIncreasing(f"{list(p)} is not 1-almost-increasing")
    letters = []
    while p:
        ch, p = _peel(p)
        letters.append(ch)
    return "".join(letters)


def ai_to_rect(p: Sequence[int]) -> Perm:
    return rect.decode_rect(encode_ai(p))


def rect_to_ai(p: Sequence[int]) -> Perm:
    return decode_ai(rect.encode_rect(p))
