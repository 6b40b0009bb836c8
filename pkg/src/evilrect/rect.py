"""Rectangular permutations: the operators psi_1, psi_2, psi_u, psi_d and the word codec."""

from __future__ import annotations

from typing import Sequence

from .langs import InvalidWord, is_valid_rect_word
from .perm import Perm, delete_at, insert_rho


class DomainError(ValueError):
    """An operator was applied outside its domain."""


class NotRectangular(ValueError):
    pass


# Operators check only the structural restrictions of their domains; the
# rectangularity of the argument is the caller's contract.

def apply_psi1(p: Sequence[int]) -> Perm:
    return insert_rho(p, 1, 1)


def apply_psi2(p: Sequence[int]) -> Perm:
    if not p or p[0] == 1:
        raise DomainError(f"psi_2 needs a first entry other than 1: {list(p)}")
    return insert_rho(p, 1, 2)


def apply_psiu(p: Sequence[int]) -> Perm:
    if not p or p[0] == 1:
        raise DomainError(f"psi_u needs a first entry other than 1: {list(p)}")
    return insert_rho(p, p[0], 1)


def apply_psid(p: Sequence[int]) -> Perm:
    if not p:
        raise DomainError("psi_d is undefined on e_0")
    return insert_rho(p, p[0] + 1, 1)


OPERATORS = {"1": apply_psi1, "2": apply_psi2, "u": apply_psiu, "d": apply_psid}


def decode_rect(word: str) -> Perm:
    if not is_valid_rect_word(word):
        raise InvalidWord(f"not a rect word: {word!r}")
    p: Perm = ()
    for ch in reversed(word):
        p = OPERATORS[ch](p)
    return p


def peel_rect(p: Sequence[int]) -> tuple[str, Perm]:
    """The outermost letter of ``p`` and the permutation it was applied to."""
    if p[0] == 1:
        return "1", delete_at(p, 1)
    if len(p) >= 2:
        if p[1] == 1:
            if p[0] == 2:
                return "d", delete_at(p, 1)
            return "2", delete_at(p, 2)
        if p[1] == p[0] + 1:
            return "u", delete_at(p, 1)
        if p[1] == p[0] - 1:
            return "d", delete_at(p, 1)
    raise NotRectangular(f"first two entries of {list(p)} admit no operator")


def encode_rect(p: Sequence[int]) -> str:
    """Encode a rectangular permutation; peeling fails exactly on non-rectangular input."""
    if not p:
        raise ValueError("e_0 has no word (words have positive length)")
    letters = []
    cur = tuple(p)
    try:
        while cur:
            ch, cur = peel_rect(cur)
            letters.append(ch)
    except NotRectangular:
        raise NotRectangular(f"{list(p)} is not rectangular") from None
    return "".join(letters)


def is_rectangular_fast(p: Sequence[int]) -> bool:
    try:
        encode_rect(p)
    except NotRectangular:
        return False
    return True
