import pytest

from evilrect.enumeration import (
    CountTable,
    count_table,
    evil_count_closed,
    evil_count_recur,
    refined_count,
    seq_count,
)
from evilrect.langs import Lang, count_words, count_words_marked
from evilrect.walks import count_walks


def test_sequence_head():
    assert [seq_count(n) for n in range(1, 7)] == [1, 2, 6, 20, 68, 232]
    assert seq_count(7) == 792
    assert seq_count(3) == 6


def test_sequence_domain():
    with pytest.raises(ValueError):
        seq_count(0)


def test_printed_plus_sign_does_not_fit():
    # 4 e(2) + 2 e(1) would give 10, not 6
    assert 4 * seq_count(2) + 2 * seq_count(1) != seq_count(3)


def test_closed_form_examples():
    assert evil_count_closed(3, 1) == 4
    assert evil_count_closed(2, 1) == 1
    for n in range(2, 10):
        assert evil_count_closed(n, n - 1) == 1
    with pytest.raises(ValueError):
        evil_count_closed(3, 0)


def test_recurrence_examples():
    assert evil_count_recur(3, 1) == 4
    for n in range(0, 8):
        assert evil_count_recur(n, 0) == 1
    assert evil_count_recur(4, 3) == 1


def test_recurrence_equals_closed_form():
    for n in range(1, 31):
        for k in range(1, n):
            assert evil_count_recur(n, k) == evil_count_closed(n, k)


@pytest.mark.parametrize("n", range(1, 13))
def test_counts_agree_across_methods(n):
    assert seq_count(n) == count_words(Lang.RECT, n) == count_words(Lang.EVIL, n) == count_walks(2 * n - 2)
    for k in range(1, n):
        closed = evil_count_closed(n, k)
        assert count_words_marked(Lang.EVIL, n, k) == closed
        assert count_words_marked(Lang.RECT, n, k) == closed


@pytest.mark.parametrize("method", ["closed", "recur"])
def test_row_sums(method):
    table = count_table(15, method)
    for n in range(1, 16):
        assert table.row_sum(n) == seq_count(n)
        assert set(table.row(n)) == set(range(n))


def test_refined_count_edges():
    assert refined_count(5, 0) == 1
    assert refined_count(5, 5) == 0
    assert refined_count(5, -1) == 0
    with pytest.raises(ValueError):
        refined_count(5, 2, "nope")


def test_count_table_bookkeeping():
    t = CountTable()
    t.set(3, 1, 4, "closed")
    assert t.get(3, 1) == 4
    assert t.get(3, 2) == 0
    assert t.rows() == [{"n": 3, "k": 1, "count": 4, "method": "closed"}]
    with pytest.raises(ValueError):
        t.set(3, 2, -1, "closed")
