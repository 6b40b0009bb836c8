"""Closed walks at the middle vertex of the 7-vertex path, coded as rect words.

A walk is a string over ``L``/``R`` starting at v4. Steps are read in pairs;
after each pair the walk sits on v2, v4 or v6, and the pair becomes one rect
letter. The two loop pairs at each state get a fixed assignment (LR first).
"""

from __future__ import annotations

from itertools import product

from .langs import InvalidWord, is_valid_rect_word

# state -> step pair -> (letter, next state)
PAIR_TO_LETTER = {
    4: {"LR": ("1", 4), "RL": ("d", 4), "LL": ("u", 2), "RR": ("2", 6)},
    2: {"LR": ("2", 2), "RL": ("u", 2), "RR": ("d", 4)},
    6: {"LR": ("2", 6), "RL": ("u", 6), "LL": ("d", 4)},
}
LETTER_TO_PAIR = {
    q: {ch: (pair, nxt) for pair, (ch, nxt) in table.items()} for q, table in PAIR_TO_LETTER.items()
}


class InvalidWalk(ValueError):
    pass


def trajectory(walk: str) -> list[int]:
    """Vertex indices visited, starting at 4."""
    pos = [4]
    for step in walk:
        if step not in "LR":
            raise InvalidWalk(f"bad step {step!r}")
        pos.append(pos[-1] + (1 if step == "R" else -1))
    return pos


def is_valid_walk(walk: str) -> bool:
    try:
        path = trajectory(walk)
    except InvalidWalk:
        return False
    return len(walk) % 2 == 0 and path[-1] == 4 and all(1 <= v <= 7 for v in path)


def walk_to_word(walk: str) -> str:
    if not is_valid_walk(walk):
        raise InvalidWalk(f"not a closed walk at v4 on P7: {walk!r}")
    state = 4
    letters = []
    for i in range(0, len(walk), 2):
        ch, state = PAIR_TO_LETTER[state][walk[i:i + 2]]
        letters.append(ch)
    return "".join(letters) + "1"


def word_to_walk(word: str) -> str:
    if not is_valid_rect_word(word):
        raise InvalidWord(f"not a rect word: {word!r}")
    state = 4
    pairs = []
    for ch in word[:-1]:
        pair, state = LETTER_TO_PAIR[state][ch]
        pairs.append(pair)
    assert state == 4
    return "".join(pairs)


def _adjacency() -> list[list[int]]:
    return [[1 if abs(i - j) == 1 else 0 for j in range(7)] for i in range(7)]


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]


def count_walks(length: int) -> int:
    """Closed walks of the given even length at v4, via an exact matrix power."""
    if length < 0 or length % 2:
        raise ValueError(f"walk length must be even and nonnegative, got {length}")
    result = [[int(i == j) for j in range(7)] for i in range(7)]
    base = _adjacency()
    e = length
    while e:
        if e & 1:
            result = _matmul(result, base)
        base = _matmul(base, base)
        e >>= 1
    return result[3][3]


def generate_walks(length: int):
    """Brute force: every closed walk at v4 of the given length."""
    for steps in product("LR", repeat=length):
        w = "".join(steps)
        if is_valid_walk(w):
            yield w
