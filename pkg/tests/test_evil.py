import pytest
from hypothesis import given

from conftest import perms
from evilrect.evil import (
    NotEvilAvoiding,
    apply_psi_ikn,
    apply_psip,
    apply_psiq,
    apply_psir,
    apply_psis,
    decode_evil,
    encode_evil,
    invert_psiq,
    least_recoil,
    psi_ikn_block,
)
from evilrect.langs import Lang, generate_words
from evilrect.oracle import PermClass, enumerate_class
from evilrect.perm import identity, is_evil_avoiding, is_identity, recoils, sandwich_params
from evilrect.rect import DomainError

TAU = (4, 5, 1, 2, 3)
NU = (2, 1, 4, 5, 3)


def test_least_recoil():
    assert least_recoil(TAU) == 3
    assert least_recoil((2, 1)) == 1
    assert least_recoil(NU) == 1
    with pytest.raises(DomainError):
        least_recoil(identity(3))


def test_operators_on_sandwiched_example():
    assert apply_psip(TAU) == (1, 5, 6, 2, 3, 4)
    assert apply_psiq(TAU) == (4, 1, 5, 6, 2, 3)
    assert apply_psir(TAU) == (5, 6, 2, 3, 4, 1)
    assert apply_psis(TAU) == (5, 6, 1, 2, 3, 4)


def test_operators_on_plain_example():
    assert apply_psip(NU) == (1, 3, 2, 5, 6, 4)
    assert apply_psiq(NU) == (2, 3, 1, 5, 6, 4)
    assert apply_psir(NU) == (3, 2, 5, 6, 4, 1)
    with pytest.raises(DomainError):
        apply_psis(NU)


def test_psis_on_identity():
    for n in range(6):
        assert apply_psis(identity(n)) == identity(n + 1)


def test_identity_domain():
    for op in (apply_psip, apply_psiq):
        with pytest.raises(DomainError):
            op(identity(3))
    with pytest.raises(DomainError):
        apply_psir(())


def test_decode_examples():
    assert decode_evil("qrs") == (2, 1, 3)
    assert decode_evil("s") == (1,)
    assert decode_evil("qqqsrsrssrqrsrqqpprs") == (3, 4, 5, 1, 12, 11, 18, 19, 15, 16, 17, 20, 13, 14, 8, 9, 10, 6, 7, 2)


def test_encode_examples():
    assert encode_evil((2, 1, 3)) == "qrs"
    assert encode_evil((3, 1, 2)) == "srs"
    assert encode_evil((3, 5, 4, 2, 1)) == "rrprs"


def test_encode_rejects_non_evil():
    with pytest.raises(NotEvilAvoiding):
        encode_evil((5, 6, 2, 3, 1, 4))


def test_psiq_inverse_on_examples():
    assert invert_psiq((4, 1, 5, 6, 2, 3)) == TAU
    assert invert_psiq((2, 3, 1, 5, 6, 4)) == NU


@pytest.mark.parametrize("n", range(1, 10))
def test_round_trips(n):
    for p in enumerate_class(n, PermClass.EVIL):
        w = encode_evil(p, check=False)
        assert decode_evil(w) == p
        assert w.count("r") == len(recoils(p))
    for w in generate_words(Lang.EVIL, n):
        assert encode_evil(decode_evil(w)) == w


@pytest.mark.parametrize("n", range(0, 9))
def test_operators_preserve_class(n):
    for p in enumerate_class(n, PermClass.EVIL):
        k = len(recoils(p))
        for op, dk in ((apply_psip, 0), (apply_psiq, 0), (apply_psir, 1), (apply_psis, 0)):
            try:
                q = op(p)
            except DomainError:
                continue
            assert is_evil_avoiding(q)
            assert len(recoils(q)) == k + dk


@pytest.mark.parametrize("n", range(2, 9))
def test_disjoint_decomposition(n):
    # Evil(n, k) = psi_p(Evil(n-1,k)) + psi_q(Evil(n-1,k)) + sum over i of psi_{i,k,n+1}(Evil(i-1,k-1))
    by_k = {}
    for m in range(1, n + 1):
        for p in enumerate_class(m, PermClass.EVIL):
            by_k.setdefault((m, len(recoils(p))), []).append(p)
    for k in range(1, n):
        images = []
        for p in by_k.get((n - 1, k), []):
            images += [apply_psip(p), apply_psiq(p)]
        for i in range(k + 1, n + 1):
            for p in by_k.get((i - 1, k - 1), []):
                images.append(apply_psi_ikn(p, i, k, n + 1))
        assert len(images) == len(set(images))
        assert set(images) == set(by_k[n, k])


@pytest.mark.parametrize("n", range(1, 9))
def test_sandwich_parameters_give_least_recoil(n):
    for p in enumerate_class(n, PermClass.EVIL):
        sp = sandwich_params(p)
        if sp is not None and not is_identity(p):
            assert least_recoil(p) == sp.a + sp.b


def test_psi_ikn_examples():
    for p in [(2, 1), (1,), (3, 1, 2)]:
        i = len(p) + 1
        k = len(recoils(p)) + 1
        assert apply_psi_ikn(p, i, k, i + 1) == apply_psir(p)
    assert apply_psi_ikn((2, 1), 3, 2, 5) == (4, 3, 1, 2)
    assert psi_ikn_block((2, 1), 3, 5) == (4, 3, 1, 2)
    assert psi_ikn_block((1,), 2, 5) == (4, 1, 2, 3)
    assert apply_psis(apply_psis(apply_psir((1,)))) == (4, 1, 2, 3)


def test_psi_ikn_range():
    with pytest.raises(ValueError):
        apply_psi_ikn((2, 1), 3, 2, 3)


@given(perms(1, 12))
def test_encode_matches_membership(p):
    if is_evil_avoiding(p):
        assert decode_evil(encode_evil(p)) == p
    else:
        with pytest.raises(NotEvilAvoiding):
            encode_evil(p)
