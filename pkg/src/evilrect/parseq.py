"""Partition sequences and their maps, plus an independent evil-avoiding encoder.

Partitions are tuples of positive parts. A partition of ``r`` parts is valid
for ``n`` when it fits in an ``r x (n - r)`` box without filling it; since the
first part always equals the box width in the image of ``P``, that is the same
as reading the implied length as ``n - first part``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import evil
from .perm import (
    Perm,
    descents,
    from_lehmer_code,
    inverse,
    is_evil_avoiding,
    is_identity,
    lehmer_code,
    recoils,
)

Partition = tuple[int, ...]


class InvalidPartitionSequence(ValueError):
    pass


@dataclass(frozen=True)
class PartitionSequence:
    parts: tuple[Partition, ...]
    n: int

    @property
    def k(self) -> int:
        return len(self.parts)

    def to_json(self) -> list[list[int]]:
        return [list(lam) for lam in self.parts]


def _strip(parts: Sequence[int]) -> Partition:
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def is_valid_partition(lam: Partition, n: int) -> bool:
    r = len(lam)
    if r == 0 or any(x <= 0 for x in lam) or any(x < y for x, y in zip(lam, lam[1:])):
        return False
    width = n - r
    if lam[0] > width:
        return False
    return not (lam[0] == width and lam[-1] == width)


def is_parseq(ps: PartitionSequence) -> bool:
    n = ps.n
    if ps.k == 0:
        return True
    if not 1 <= ps.k <= n - 2:
        return False
    if not all(is_valid_partition(lam, n) for lam in ps.parts):
        return False
    for lam, nxt in zip(ps.parts, ps.parts[1:]):
        need = n - lam[-1]
        if len(nxt) < need or len(set(nxt[:need])) != 1:
            return False
    return True


def _require(ps: PartitionSequence) -> None:
    if not is_parseq(ps):
        raise InvalidPartitionSequence(f"not in ParSeq({ps.n},{ps.k}): {ps.to_json()}")


# ---------------------------------------------------------------- f and P

def f(p: Sequence[int]) -> Perm:
    """Evil(n-1, k) -> St(n, k): prepend 1 and shift everything up."""
    return (1,) + tuple(v + 1 for v in p)


def f_inv(s: Sequence[int]) -> Perm:
    if not s or s[0] != 1:
        raise ValueError(f"expected a permutation starting with 1: {list(s)}")
    return tuple(v - 1 for v in s[1:])


def P(s: Sequence[int]) -> PartitionSequence:
    """St(n, k) -> ParSeq(n, k) via the Lehmer code of the inverse."""
    n = len(s)
    if not s or s[0] != 1:
        raise ValueError(f"expected a permutation starting with 1: {list(s)}")
    c = lehmer_code(inverse(s))
    cuts = sorted(descents(c))
    parts = []
    prev = 0
    for a in cuts:
        sub = [0] * prev + list(c[prev:a])
        parts.append(_strip([n - a - x for x in sub]))
        prev = a
    return PartitionSequence(tuple(parts), n)


def P_inv(ps: PartitionSequence) -> Perm:
    _require(ps)
    n = ps.n
    code = [0] * n
    for lam in ps.parts:
        first = lam[0]
        length = n - first
        padded = list(lam) + [0] * (length - len(lam))
        for j, x in enumerate(padded):
            code[j] += first - x
    return inverse(from_lehmer_code(code))


# ---------------------------------------------------------------- Psi1, Psi2, Phi

def Psi1(ps: PartitionSequence) -> PartitionSequence:
    """Duplicate the first part of every partition."""
    if ps.k < 1:
        raise ValueError("Psi1 needs k >= 1")
    return PartitionSequence(tuple((lam[0],) + lam for lam in ps.parts), ps.n + 1)


def Psi2(ps: PartitionSequence) -> PartitionSequence:
    if ps.k < 1:
        raise ValueError("Psi2 needs k >= 1")
    lam1 = ps.parts[0]
    if len(set(lam1)) == 1:
        mu1 = (lam1[0] + 1,) + lam1
    else:
        mu1 = (lam1[0] + 1,) + lam1[1:]
    rest = tuple((lam[0],) + lam for lam in ps.parts[1:])
    return PartitionSequence((mu1,) + rest, ps.n + 1)


def Phi(ps: PartitionSequence, i: int, k: int, n: int) -> PartitionSequence:
    """ParSeq(i, k-1) -> ParSeq(n, k)."""
    if ps.n != i or ps.k != k - 1 or not k + 1 <= i <= n - 1:
        raise ValueError(f"Phi_{{{i},{k},{n}}} undefined on ParSeq({ps.n},{ps.k})")
    dup = n - i
    mus = tuple((lam[0],) * dup + lam for lam in ps.parts)
    return PartitionSequence(((i - 1,),) + mus, n)


def invert_Psi1(ps: PartitionSequence) -> PartitionSequence:
    return PartitionSequence(tuple(lam[1:] for lam in ps.parts), ps.n - 1)


def invert_Psi2(ps: PartitionSequence) -> PartitionSequence:
    mu1 = ps.parts[0]
    rest = tuple(lam[1:] for lam in ps.parts[1:])
    hits = []
    for lam1 in (mu1[1:], (mu1[0] - 1,) + mu1[1:]):
        cand = PartitionSequence((lam1,) + rest, ps.n - 1)
        if lam1 and is_parseq(cand) and Psi2(cand) == ps:
            hits.append(cand)
    if len(hits) != 1:
        raise evil.InternalInversionFailure(f"Psi2 preimages of {ps.to_json()}: {hits}")
    return hits[0]


def invert_Phi(ps: PartitionSequence) -> tuple[PartitionSequence, int]:
    """Returns the preimage and ``i``."""
    i = ps.parts[0][0] + 1
    dup = ps.n - i
    return PartitionSequence(tuple(lam[dup:] for lam in ps.parts[1:]), i), i


def classify(ps: PartitionSequence) -> str:
    """Which of the three disjoint image families holds ``ps`` (k >= 1)."""
    lam1 = ps.parts[0]
    if len(lam1) == 1:
        return "Phi"
    return "Psi1" if lam1[0] == lam1[1] else "Psi2"


# ---------------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def valid_partitions(n: int) -> tuple[Partition, ...]:
    out = []

    def grow(prefix: list[int], cap: int) -> None:
        if prefix and is_valid_partition(tuple(prefix), n):
            out.append(tuple(prefix))
        if len(prefix) + 1 > n - 1:
            return
        for x in range(1, cap + 1):
            if x <= n - (len(prefix) + 1):
                grow(prefix + [x], x)

    grow([], n)
    return tuple(sorted(out))


def enumerate_parseq(n: int, k: int) -> Iterator[PartitionSequence]:
    """Brute force: all tuples of valid partitions satisfying the chain condition."""
    if k == 0:
        yield PartitionSequence((), n)
        return
    if not 1 <= k <= n - 2:
        return
    pool = valid_partitions(n)

    def extend(seq: tuple[Partition, ...]) -> Iterator[tuple[Partition, ...]]:
        if len(seq) == k:
            yield seq
            return
        for lam in pool:
            cand = PartitionSequence(seq + (lam,), n)
            if is_parseq(cand):
                yield from extend(seq + (lam,))

    for seq in extend(()):
        yield PartitionSequence(seq, n)


# ---------------------------------------------------------------- encoder

def parseq_encode_evil(p: Sequence[int]) -> str:
    """Evil word computed on the partition-sequence side of the conjugation."""
    p = tuple(p)
    if not p:
        raise ValueError("e_0 has no word (words have positive length)")
    if not is_evil_avoiding(p):
        raise evil.NotEvilAvoiding(f"{list(p)} is not evil-avoiding")
    letters = []
    while not is_identity(p):
        ps = P(f(p))
        kind = classify(ps)
        if kind == "Phi":
            pre, i = invert_Phi(ps)
            letters.append("s" * (ps.n - i - 1) + "r")
        elif kind == "Psi1":
            pre = invert_Psi1(ps)
            letters.append("p")
        else:
            pre = invert_Psi2(ps)
            letters.append("q")
        p = f_inv(P_inv(pre))
    letters.append("s" * len(p))
    return "".join(letters)


def conjugation_check(p: Sequence[int], max_extra: int = 3) -> bool:
    """All three conjugation identities at ``p``.

    The psi_{i,k,n} identity is checked for ``i = len(p) + 1`` and every
    ``n`` from ``i + 1`` to ``i + max_extra``.
    """
    p = tuple(p)
    if is_identity(p):
        raise ValueError("conjugation identities need a non-identity permutation")
    q = P(f(p))
    if evil.apply_psip(p) != f_inv(P_inv(Psi1(q))):
        return False
    if evil.apply_psiq(p) != f_inv(P_inv(Psi2(q))):
        return False
    i = len(p) + 1
    k = len(recoils(p)) + 1
    for n in range(i + 1, i + max_extra + 1):
        if evil.apply_psi_ikn(p, i, k, n) != f_inv(P_inv(Phi(q, i, k, n))):
            return False
    return True
