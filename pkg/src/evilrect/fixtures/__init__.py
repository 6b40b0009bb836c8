"""Golden data: the 32-row example table and the two 101-element figure permutations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..perm import Perm, as_perm


@dataclass(frozen=True)
class TableRow:
    rect_perm: Perm
    rect_word: str
    evil_word: str
    evil_perm: Perm


def _load(name: str):
    return json.loads(resources.files(__name__).joinpath(name).read_text())


def table1_errata() -> list[dict]:
    return _load("table1_errata.json")


def table1(apply_errata: bool = True) -> list[TableRow]:
    """Rows as printed, with documented errata applied unless ``apply_errata`` is False."""
    raw = _load("table1.json")
    if apply_errata:
        columns = ["rect_perm", "rect_word", "evil_word", "evil_perm"]
        for fix in table1_errata():
            row = raw[fix["row"] - 1]
            col = columns.index(fix["column"])
            assert row[col] == fix["printed"], fix
            row[col] = fix["corrected"]
    return [TableRow(as_perm(a), b, c, as_perm(d)) for a, b, c, d in raw]


def figure1_evil() -> Perm:
    return as_perm(_load("figure1_evil.json"))


def figure2_rect() -> Perm:
    return as_perm(_load("figure2_rect.json"))
