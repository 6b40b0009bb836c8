"""The three operator languages as hand-built DFAs.

Words are stored leftmost-outermost: ``"ud1"`` means psi_u(psi_d(psi_1(e_0))),
so the rightmost letter is applied first. Automata read left to right.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


class InvalidWord(ValueError):
    pass


class Lang(enum.Enum):
    RECT = "rect"
    EVIL = "evil"
    AI = "ai"


LETTERS = {
    Lang.RECT: "12ud",
    Lang.EVIL: "pqrs",
    # 1-almost-increasing words are written in rect letters:
    # 1 = rho_{1,1}, 2 = rho_{2,1}, u = rho_{2,2}, d = rho_{1,2}
    Lang.AI: "12ud",
}
MARKED = {Lang.RECT: "d", Lang.EVIL: "r", Lang.AI: "d"}

DEAD = "dead"


@dataclass(frozen=True)
class Automaton:
    lang: Lang
    letters: str
    start: str
    accepting: frozenset[str]
    delta: dict  # (state, letter) -> state; total over live states and letters
    marked: str

    @property
    def states(self) -> tuple[str, ...]:
        seen = [self.start]
        for (q, _), r in self.delta.items():
            for s in (q, r):
                if s not in seen:
                    seen.append(s)
        return tuple(seen)

    def run(self, word: str) -> str:
        q = self.start
        for ch in word:
            if ch not in self.letters:
                raise InvalidWord(f"{ch!r} is not a {self.lang.value} letter")
            q = self.delta[q, ch]
        return q

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting


def _rect_dfa(lang: Lang) -> Automaton:
    # "open": nothing read yet, or last letter d; "one": last letter 1;
    # "up": last letter 2 or u (a following 1 is forbidden)
    delta = {}
    for q in ("open", "one", "up"):
        delta[q, "1"] = DEAD if q == "up" else "one"
        delta[q, "2"] = "up"
        delta[q, "u"] = "up"
        delta[q, "d"] = "open"
    for ch in "12ud":
        delta[DEAD, ch] = DEAD
    return Automaton(lang, "12ud", "open", frozenset({"one"}), delta, "d")


def _evil_dfa() -> Automaton:
    # "open": start or just after r; "tail": only s since the last r (accepting);
    # "pq": inside a p/q block; "mid": s after a p/q block, waiting for r
    delta = {
        ("open", "p"): "pq", ("open", "q"): "pq", ("open", "s"): "tail", ("open", "r"): "open",
        ("tail", "p"): DEAD, ("tail", "q"): DEAD, ("tail", "s"): "tail", ("tail", "r"): "open",
        ("pq", "p"): "pq", ("pq", "q"): "pq", ("pq", "s"): "mid", ("pq", "r"): "open",
        ("mid", "p"): DEAD, ("mid", "q"): DEAD, ("mid", "s"): "mid", ("mid", "r"): "open",
    }
    for ch in "pqrs":
        delta[DEAD, ch] = DEAD
    return Automaton(Lang.EVIL, "pqrs", "open", frozenset({"tail"}), delta, "r")


AUTOMATA = {Lang.RECT: _rect_dfa(Lang.RECT), Lang.EVIL: _evil_dfa(), Lang.AI: _rect_dfa(Lang.AI)}


def _check_letters(word: str, lang: Lang) -> None:
    bad = set(word) - set(LETTERS[lang])
    if bad:
        raise InvalidWord(f"letters {sorted(bad)} are not in the {lang.value} alphabet")


def is_valid_rect_word(word: str) -> bool:
    _check_letters(word, Lang.RECT)
    return AUTOMATA[Lang.RECT].accepts(word)


def is_valid_evil_word(word: str) -> bool:
    _check_letters(word, Lang.EVIL)
    return AUTOMATA[Lang.EVIL].accepts(word)


def is_valid_word(word: str, lang: Lang) -> bool:
    _check_letters(word, lang)
    return AUTOMATA[lang].accepts(word)


def rect_word_by_substrings(word: str) -> bool:
    """Membership by the substring description: ends in 1, no 21, no u1."""
    return word.endswith("1") and "21" not in word and "u1" not in word


def evil_word_by_substrings(word: str) -> bool:
    """Membership by the substring description: ends in s, no sp/sq, only s after the last r."""
    if not word.endswith("s") or "sp" in word or "sq" in word:
        return False
    return set(word[word.rfind("r") + 1:]) == {"s"}


_RECT_TO_EVIL = str.maketrans("12ud", "spqr")
_EVIL_TO_RECT = str.maketrans("spqr", "12ud")


def _reverse_before_last_r(word: str) -> str:
    cut = word.rfind("r")
    if cut < 0:
        return word
    return word[:cut][::-1] + word[cut:]


def map_b(word: str) -> str:
    """Length-preserving bijection from rect words to evil words."""
    if not is_valid_rect_word(word):
        raise InvalidWord(f"not a rect word: {word!r}")
    return _reverse_before_last_r(word.translate(_RECT_TO_EVIL))


def map_b_inv(word: str) -> str:
    if not is_valid_evil_word(word):
        raise InvalidWord(f"not an evil word: {word!r}")
    return _reverse_before_last_r(word).translate(_EVIL_TO_RECT)


@lru_cache(maxsize=None)
def _tail_counts(lang: Lang, length: int) -> dict[str, int]:
    """Number of accepted completions of each remaining length, per state."""
    dfa = AUTOMATA[lang]
    if length == 0:
        return {q: int(q in dfa.accepting) for q in dfa.states}
    nxt = _tail_counts(lang, length - 1)
    return {q: sum(nxt[dfa.delta[q, ch]] for ch in dfa.letters) for q in dfa.states}


def generate_words(lang: Lang, n: int) -> Iterator[str]:
    """Every word of length ``n`` in lexicographic order of the alphabet listing."""
    dfa = AUTOMATA[lang]

    def walk(q: str, prefix: str) -> Iterator[str]:
        left = n - len(prefix)
        if left == 0:
            yield prefix
            return
        for ch in dfa.letters:
            r = dfa.delta[q, ch]
            if _tail_counts(lang, left - 1)[r]:
                yield from walk(r, prefix + ch)

    if n >= 1 and _tail_counts(lang, n)[dfa.start]:
        yield from walk(dfa.start, "")


def marked_counts(lang: Lang, n: int) -> list[int]:
    """Transfer-matrix pass: entry ``k`` counts words of length ``n`` with ``k`` marked letters."""
    dfa = AUTOMATA[lang]
    if n <= 0:
        return [0]
    vec = {dfa.start: [1] + [0] * n}
    for _ in range(n):
        nxt: dict[str, list[int]] = {}
        for q, poly in vec.items():
            for ch in dfa.letters:
                r = dfa.delta[q, ch]
                if r == DEAD:
                    continue
                shift = 1 if ch == dfa.marked else 0
                acc = nxt.setdefault(r, [0] * (n + 1))
                for k in range(n + 1 - shift):
                    acc[k + shift] += poly[k]
        vec = nxt
    total = [0] * (n + 1)
    for q, poly in vec.items():
        if q in dfa.accepting:
            for k, c in enumerate(poly):
                total[k] += c
    return total


def count_words(lang: Lang, n: int) -> int:
    return sum(marked_counts(lang, n))


def count_words_marked(lang: Lang, n: int, k: int) -> int:
    counts = marked_counts(lang, n)
    return counts[k] if 0 <= k < len(counts) else 0
