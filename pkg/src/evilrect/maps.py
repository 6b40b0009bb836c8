"""Conversions among evil, rect, ai permutations and P7 walks through rect words.

Every object is first turned into its rect word, then rebuilt on the target
side, so any pair of kinds is connected by at most two codec steps plus the
word bijection. Permutations are tuples; walks are ``L``/``R`` strings.
"""

from __future__ import annotations

from typing import Union

from . import almost_inc, evil, rect, walks
from .langs import map_b, map_b_inv

KINDS = ("evil", "rect", "ai", "walk")

Obj = Union[tuple, str]


def to_rect_word(obj: Obj, kind: str) -> str:
    if kind == "rect":
        return rect.encode_rect(obj)
    if kind == "evil":
        return map_b_inv(evil.encode_evil(obj))
    if kind == "ai":
        # ai words and rect words share the alphabet and the language
        return almost_inc.encode_ai(obj)
    if kind == "walk":
        return walks.walk_to_word(obj)
    raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")


def from_rect_word(word: str, kind: str) -> Obj:
    if kind == "rect":
        return rect.decode_rect(word)
    if kind == "evil":
        return evil.decode_evil(map_b(word))
    if kind == "ai":
        return almost_inc.decode_ai(word)
    if kind == "walk":
        return walks.word_to_walk(word)
    raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")


def convert(obj: Obj, src: str, dst: str) -> Obj:
    """Send a member of ``src`` to the corresponding member of ``dst``.

    ``convert(p, "evil", "rect")`` is ``decode_rect(map_b_inv(encode_evil(p)))``
    and preserves the number of recoils.
    """
    return from_rect_word(to_rect_word(obj, src), dst)
