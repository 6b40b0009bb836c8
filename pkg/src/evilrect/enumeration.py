"""Counting formulas for the A006012 classes, exact integers throughout."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb


@dataclass
class CountTable:
    """Counts keyed by (size n, recoil count k), each tagged with how it was obtained."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    provenance: dict[tuple[int, int], str] = field(default_factory=dict)

    def set(self, n: int, k: int, count: int, method: str) -> None:
        if count < 0:
            raise ValueError(f"negative count at ({n},{k})")
        self.entries[n, k] = count
        self.provenance[n, k] = method

    def get(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row(self, n: int) -> dict[int, int]:
        return {k: c for (m, k), c in sorted(self.entries.items()) if m == n}

    def row_sum(self, n: int) -> int:
        return sum(self.row(n).values())

    def sizes(self) -> list[int]:
        return sorted({n for n, _ in self.entries})

    def rows(self) -> list[dict]:
        return [
            {"n": n, "k": k, "count": c, "method": self.provenance[n, k]}
            for (n, k), c in sorted(self.entries.items())
        ]


def seq_count(n: int) -> int:
    """|Evil(n)| = |Rect(n)|: e(1)=1, e(2)=2, e(n) = 4 e(n-1) - 2 e(n-2)."""
    if n <= 0:
        raise ValueError("n must be positive")
    a, b = 1, 2
    if n == 1:
        return a
    for _ in range(n - 2):
        a, b = b, 4 * b - 2 * a
    return b


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def evil_count_closed(n: int, k: int) -> int:
    """Sum over i of 2^i C(i+k-1, k-1) C(n-i-1, k), for k >= 1."""
    if n < 1 or k < 1:
        raise ValueError("closed form needs n >= 1 and k >= 1 (|Evil(n,0)| = 1)")
    return sum(2 ** i * _binom(i + k - 1, k - 1) * _binom(n - i - 1, k) for i in range(n - k))


@lru_cache(maxsize=None)
def _recur(n: int, k: int) -> int:
    if n < 0 or k < 0:
        return 0
    if k == 0:
        return 1
    if k >= n:
        return 0
    return 3 * _recur(n - 1, k) + _recur(n - 1, k - 1) - 2 * _recur(n - 2, k)


def evil_count_recur(n: int, k: int) -> int:
    """3 E(n-1,k) + E(n-1,k-1) - 2 E(n-2,k) with E(n,0)=1 and E(n,k)=0 for k >= n."""
    return _recur(n, k)


def refined_count(n: int, k: int, method: str = "closed") -> int:
    """|Evil(n,k)| by ``closed`` or ``recur``; k = 0 is the identity."""
    if k == 0:
        return 1 if n >= 0 else 0
    if k < 0 or k >= n:
        return 0
    if method == "closed":
        return evil_count_closed(n, k)
    if method == "recur":
        return evil_count_recur(n, k)
    raise ValueError(f"unknown method {method!r}")


def count_table(max_n: int, method: str = "closed") -> CountTable:
    table = CountTable()
    for n in range(1, max_n + 1):
        for k in range(n):
            table.set(n, k, refined_count(n, k, method), method)
    return table
