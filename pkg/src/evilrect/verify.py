"""Cross-validation of every codec and count against brute force.

Each check scans sizes in increasing order and stops at the first failure, so
a reported counterexample is minimal in size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator

from . import almost_inc, evil, fixtures, langs, parseq, rect, walks
from .enumeration import evil_count_closed, evil_count_recur, seq_count
from .langs import Lang
from .maps import convert
from .oracle import PermClass, class_size, enumerate_class
from .perm import RECT_PATTERNS, avoids_all, is_identity, recoils


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: object = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


def _counts(max_n: int):
    for n in range(1, max_n + 1):
        want = seq_count(n)
        for cls in (PermClass.EVIL, PermClass.RECT, PermClass.AI):
            got = class_size(n, cls)
            if got != want:
                return {"n": n, "class": cls.value, "brute": got, "recurrence": want}
        for lang in Lang:
            if langs.count_words(lang, n) != want:
                return {"n": n, "language": lang.value}
        if walks.count_walks(2 * n - 2) != want:
            return {"n": n, "walks": walks.count_walks(2 * n - 2)}
    return None


def _refined(max_n: int):
    for n in range(1, max_n + 1):
        ev = _bucket(n, PermClass.EVIL)
        rc = _bucket(n, PermClass.RECT)
        for k in range(n):
            closed = 1 if k == 0 else evil_count_closed(n, k)
            vals = [
                ev.get(k, 0),
                rc.get(k, 0),
                langs.count_words_marked(Lang.EVIL, n, k),
                langs.count_words_marked(Lang.RECT, n, k),
                closed,
            ]
            if len(set(vals)) != 1:
                return {"n": n, "k": k, "evil/rect/L_evil/L_rect/closed": vals}
    return None


def _bucket(n: int, cls: PermClass) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in enumerate_class(n, cls):
        k = len(recoils(p))
        out[k] = out.get(k, 0) + 1
    return out


def _rect_codec(max_n: int):
    for n in range(1, max_n + 1):
        for p in permutations(range(1, n + 1)):
            is_rect = avoids_all(p, RECT_PATTERNS)
            try:
                w = rect.encode_rect(p)
            except rect.NotRectangular:
                if is_rect:
                    return {"perm": list(p), "problem": "rectangular but not peelable"}
                continue
            if not is_rect:
                return {"perm": list(p), "problem": "peelable but not rectangular"}
            if rect.decode_rect(w) != p or w.count("d") != len(recoils(p)):
                return {"perm": list(p), "word": w}
        for w in langs.generate_words(Lang.RECT, n):
            if rect.encode_rect(rect.decode_rect(w)) != w:
                return {"word": w}
    return None


def _evil_codec(max_n: int):
    for n in range(1, max_n + 1):
        for p in enumerate_class(n, PermClass.EVIL):
            w = evil.encode_evil(p, check=False)
            if evil.decode_evil(w) != p or w.count("r") != len(recoils(p)):
                return {"perm": list(p), "word": w}
        for w in langs.generate_words(Lang.EVIL, n):
            if evil.encode_evil(evil.decode_evil(w)) != w:
                return {"word": w}
    return None


def _word_bijection(max_n: int):
    for n in range(1, max_n + 1):
        rect_words = list(langs.generate_words(Lang.RECT, n))
        images = set()
        for w in rect_words:
            b = langs.map_b(w)
            if len(b) != n or b.count("r") != w.count("d") or langs.map_b_inv(b) != w:
                return {"word": w, "image": b}
            images.add(b)
        if images != set(langs.generate_words(Lang.EVIL, n)):
            return {"n": n, "problem": "image of map_b is not L_evil"}
    return None


def _perm_bijection(max_n: int):
    for n in range(1, max_n + 1):
        seen = set()
        for p in enumerate_class(n, PermClass.EVIL):
            q = convert(p, "evil", "rect")
            if len(recoils(q)) != len(recoils(p)) or q in seen or not avoids_all(q, RECT_PATTERNS):
                return {"perm": list(p), "image": list(q)}
            seen.add(q)
        if len(seen) != class_size(n, PermClass.RECT):
            return {"n": n, "problem": "not onto Rect(n)"}
    return None


def _parseq(max_n: int):
    for n in range(1, min(max_n, 8) + 1):
        for p in enumerate_class(n, PermClass.EVIL):
            if parseq.parseq_encode_evil(p) != evil.encode_evil(p, check=False):
                return {"perm": list(p), "problem": "encoders disagree"}
            if not is_identity(p) and not parseq.conjugation_check(p):
                return {"perm": list(p), "problem": "conjugation identity fails"}
        for k in range(0, n - 1):
            for ps in parseq.enumerate_parseq(n, k):
                if parseq.P(parseq.P_inv(ps)) != ps:
                    return {"parseq": ps.to_json(), "n": n}
    return None


def _almost_increasing(max_n: int):
    for n in range(1, max_n + 1):
        images = set()
        for p in enumerate_class(n, PermClass.AI):
            w = almost_inc.encode_ai(p)
            if almost_inc.decode_ai(w) != p:
                return {"perm": list(p), "word": w}
            images.add(almost_inc.ai_to_rect(p))
        if len(images) != class_size(n, PermClass.RECT):
            return {"n": n, "problem": "ai_to_rect not a bijection"}
        for p in permutations(range(1, n + 1)):
            almost_inc.is_almost_increasing(p)
    return None


def _walks(max_n: int):
    for n in range(1, max_n + 1):
        words = set()
        for w in walks.generate_walks(2 * n - 2):
            word = walks.walk_to_word(w)
            if walks.word_to_walk(word) != w:
                return {"walk": w, "word": word}
            words.add(word)
        if words != set(langs.generate_words(Lang.RECT, n)):
            return {"n": n, "problem": "walk words are not L_rect"}
    return None


def _recurrences(max_n: int):
    for n in range(1, 31):
        for k in range(1, n):
            if evil_count_recur(n, k) != evil_count_closed(n, k):
                return {"n": n, "k": k}
    return None


def _golden(max_n: int):
    for i, row in enumerate(fixtures.table1(), 1):
        got = (
            rect.encode_rect(row.rect_perm),
            langs.map_b(row.rect_word),
            evil.decode_evil(row.evil_word),
            rect.decode_rect(row.rect_word),
            evil.encode_evil(row.evil_perm),
        )
        want = (row.rect_word, row.evil_word, row.evil_perm, row.rect_perm, row.evil_word)
        if got != want:
            return {"table_row": i}
    if convert(fixtures.figure1_evil(), "evil", "rect") != fixtures.figure2_rect():
        return {"figure": 1}
    return None


def _round_trips(max_n: int):
    kinds = ("evil", "rect", "ai", "walk")
    for n in range(1, max_n + 1):
        members = {
            "evil": list(enumerate_class(n, PermClass.EVIL)),
            "rect": list(enumerate_class(n, PermClass.RECT)),
            "ai": list(enumerate_class(n, PermClass.AI)),
            "walk": list(walks.generate_walks(2 * n - 2)),
        }
        for src in kinds:
            for dst in kinds:
                for obj in members[src]:
                    if convert(convert(obj, src, dst), dst, src) != obj:
                        return {"from": src, "to": dst, "object": obj}
    return None


CHECKS: list[tuple[str, Callable[[int], object]]] = [
    ("class sizes match A006012", _counts),
    ("strong Wilf equivalence by recoils", _refined),
    ("rect codec and recognizer", _rect_codec),
    ("evil codec", _evil_codec),
    ("map_b is a bijection L_rect -> L_evil", _word_bijection),
    ("evil -> rect bijection preserves recoils", _perm_bijection),
    ("partition-sequence route agrees", _parseq),
    ("1-almost-increasing codec", _almost_increasing),
    ("walk codec", _walks),
    ("recurrence equals closed form (n <= 30)", _recurrences),
    ("golden table and figures", _golden),
    ("map round trips between all classes", _round_trips),
]


def run_checks(max_n: int = 8) -> Iterator[CheckResult]:
    for name, fn in CHECKS:
        bad = fn(max_n)
        yield CheckResult(name, bad is None, bad)
