"""Evil-avoiding permutations: psi_p, psi_q, psi_r, psi_s and the word codec."""

from __future__ import annotations

from typing import Sequence

from .langs import InvalidWord, is_valid_evil_word
from .perm import (
    Perm,
    delete_at,
    identity,
    insert_rho,
    is_evil_avoiding,
    is_identity,
    recoils,
    sandwich_params,
    shift_gamma,
    unshift_gamma,
)
from .rect import DomainError


class NotEvilAvoiding(ValueError):
    pass


class InternalInversionFailure(RuntimeError):
    """Both or neither psi_q preimage candidates reproduced the input."""


def least_recoil(p: Sequence[int]) -> int:
    r = recoils(p)
    if not r:
        raise DomainError(f"{list(p)} has no recoils")
    return min(r)


def apply_psip(p: Sequence[int]) -> Perm:
    if is_identity(p):
        raise DomainError("psi_p is undefined on identities")
    return insert_rho(p, 1, 1)


def apply_psiq(p: Sequence[int]) -> Perm:
    if is_identity(p):
        raise DomainError("psi_q is undefined on identities")
    n = len(p)
    t = least_recoil(p)
    base = insert_rho(p, t + 1, 1)
    sw = sandwich_params(p)
    if sw is None:
        return base
    return shift_gamma(base, n - sw.b + 2, sw.a + 2)


def apply_psir(p: Sequence[int]) -> Perm:
    if not p:
        raise DomainError("psi_r is undefined on e_0")
    return insert_rho(p, 1, len(p) + 1)


def identity_suffix(p: Sequence[int]) -> int:
    """Largest ``m`` such that ``p`` ends with ``1, 2, ..., m``."""
    if not p:
        return 0
    m = p[-1]
    n = len(p)
    if m > n or any(p[n - m + j] != j + 1 for j in range(m)):
        return 0
    return m


def apply_psis(p: Sequence[int]) -> Perm:
    """psi_s on identities or on permutations ending in ``1..t`` (t >= 1).

    The word grammar additionally requires psi_s to follow psi_r or psi_s;
    that is enforced by the language, not here.
    """
    if not p:
        return (1,)
    if not is_identity(p) and identity_suffix(p) == 0:
        raise DomainError(f"psi_s needs a suffix 1..t: {list(p)}")
    return insert_rho(p, p[-1] + 1, len(p) + 1)


OPERATORS = {"p": apply_psip, "q": apply_psiq, "r": apply_psir, "s": apply_psis}


def decode_evil(word: str) -> Perm:
    if not is_valid_evil_word(word):
        raise InvalidWord(f"not an evil word: {word!r}")
    p: Perm = ()
    for ch in reversed(word):
        p = OPERATORS[ch](p)
    return p


def _psiq_candidates(p: Perm) -> list[Perm]:
    n = len(p)
    v = p[0]
    cands = [delete_at(p, 1)]
    # sandwiched branch: p = (a+b+1, 1, ..., a+1, ..., moved entry at a+2, ...)
    run = 0
    while run + 1 < n and p[run + 1] == run + 1:
        run += 1
    if run >= 1:
        a = run - 1
        b = v - 1 - a
        src = n - b + 1
        if b >= 1 and a + 2 < src <= n:
            cands.append(delete_at(unshift_gamma(p, src, a + 2), 1))
    return cands


def invert_psiq(p: Sequence[int]) -> Perm:
    p = tuple(p)
    hits = []
    for c in _psiq_candidates(p):
        if is_identity(c):
            continue
        try:
            if apply_psiq(c) == p:
                hits.append(c)
        except DomainError:
            continue
    if len(hits) != 1:
        raise InternalInversionFailure(f"psi_q preimages of {list(p)}: {hits}")
    return hits[0]


def peel_evil(p: Perm) -> tuple[str, Perm]:
    """Outermost letter and preimage of a non-identity evil-avoiding permutation."""
    if p[0] == 1:
        return "p", delete_at(p, 1)
    m = identity_suffix(p)
    if m >= 2:
        return "s", delete_at(p, len(p))
    if m == 1:
        return "r", delete_at(p, len(p))
    return "q", invert_psiq(p)


def encode_evil(p: Sequence[int], check: bool = True) -> str:
    """Word of an evil-avoiding permutation.

    With ``check`` the input is first scanned for the four forbidden patterns.
    """
    p = tuple(p)
    if not p:
        raise ValueError("e_0 has no word (words have positive length)")
    if check and not is_evil_avoiding(p):
        raise NotEvilAvoiding(f"{list(p)} is not evil-avoiding")
    letters = []
    while not is_identity(p):
        ch, p = peel_evil(p)
        letters.append(ch)
    letters.append("s" * len(p))
    return "".join(letters)


def psi_ikn_block(p: Sequence[int], i: int, n: int) -> Perm:
    shift = n - i
    return tuple(v + shift for v in p) + identity(shift)


def apply_psi_ikn(p: Sequence[int], i: int, k: int, n: int) -> Perm:
    """psi_{i,k,n}: Evil(i-1, k-1) -> Evil(n-1, k), computed two ways."""
    if len(p) != i - 1:
        raise ValueError(f"expected a permutation of size {i - 1}, got {len(p)}")
    if not k + 1 <= i <= n - 1:
        raise ValueError(f"psi_{{{i},{k},{n}}} needs k+1 <= i <= n-1")
    if len(recoils(p)) != k - 1:
        raise ValueError(f"expected {k - 1} recoils in {list(p)}")
    out = apply_psir(p)
    for _ in range(n - i - 1):
        out = apply_psis(out)
    block = psi_ikn_block(p, i, n)
    assert out == block, (out, block)
    return out
