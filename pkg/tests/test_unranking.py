import pytest

from universal_words import (
    EmptySet,
    RankOutOfRange,
    build_table,
    count_universal,
    enumerate_words,
    format_word,
    rank,
    unrank,
)
from universal_words.oracle import brute_enumerate


def test_spot_unranks():
    assert format_word(unrank(0, 4, 2, 2)) == "1212"
    assert format_word(unrank(3, 4, 2, 2)) == "2121"
    assert format_word(unrank(0, 3, 1, 2)) == "112"
    assert format_word(unrank(5, 3, 1, 2)) == "221"


def test_unrank_rejects_out_of_range():
    with pytest.raises(RankOutOfRange) as info:
        unrank(7, 4, 2, 2)
    assert info.value.rank == 7
    assert info.value.set_size == 4
    with pytest.raises(RankOutOfRange):
        unrank(-1, 4, 2, 2)


def test_unrank_rejects_empty_set():
    with pytest.raises(EmptySet):
        unrank(0, 3, 2, 2)


def test_unrank_empty_word():
    assert unrank(0, 0, 0, 3).symbols == ()


def test_round_trips_both_ways():
    for sigma, n, k in [(2, 7, 2), (2, 8, 3), (3, 6, 2), (1, 5, 5), (3, 5, 1)]:
        t = build_table(n, k, sigma)
        total = count_universal(n, k, sigma, t)
        for r in range(total):
            w = unrank(r, n, k, sigma, t)
            assert rank(w, k, t).rank == r
        for w in brute_enumerate(n, k, sigma):
            r = rank(w, k, t).rank
            assert unrank(r, n, k, sigma, t).symbols == w.symbols


def test_enumeration_matches_oracle():
    for sigma, n, k in [(2, 8, 2), (2, 6, 3), (3, 6, 2), (1, 4, 4), (3, 7, 1)]:
        got = [w.symbols for w in enumerate_words(n, k, sigma)]
        want = [w.symbols for w in brute_enumerate(n, k, sigma)]
        assert got == want


def test_enumeration_examples():
    assert [format_word(w) for w in enumerate_words(3, 1, 2)] == [
        "112", "121", "122", "211", "212", "221",
    ]
    assert [format_word(w) for w in enumerate_words(4, 2, 2, from_rank=2)] == [
        "2112", "2121",
    ]
    assert [format_word(w) for w in enumerate_words(2, 1, 2, from_rank=1, limit=1)] == ["21"]


def test_enumeration_is_resumable_anywhere():
    full = [w.symbols for w in enumerate_words(7, 2, 2)]
    for start in range(len(full) + 1):
        tail = [w.symbols for w in enumerate_words(7, 2, 2, from_rank=start)]
        assert tail == full[start:]


def test_enumeration_respects_limit():
    t = build_table(8, 2, 2)
    words = list(enumerate_words(8, 2, 2, limit=5, table=t))
    assert len(words) == 5
    assert list(enumerate_words(8, 2, 2, limit=0, table=t)) == []


def test_enumeration_from_set_size_is_empty():
    total = count_universal(5, 2, 2)
    assert list(enumerate_words(5, 2, 2, from_rank=total)) == []
    with pytest.raises(RankOutOfRange):
        enumerate_words(5, 2, 2, from_rank=total + 1)


def test_enumeration_of_empty_set_yields_nothing():
    assert list(enumerate_words(3, 2, 2)) == []


def test_cursor_tracks_next_rank():
    cursor = enumerate_words(5, 1, 2, from_rank=3)
    assert cursor.next_rank == 3
    next(cursor)
    assert cursor.next_rank == 4


def test_cursor_lookup_delay_is_bounded():
    t = build_table(10, 2, 2)
    cursor = enumerate_words(10, 2, 2, table=t)
    seen = t.lookups
    for _ in cursor:
        assert t.lookups - seen <= 2 * 10 * 2
        seen = t.lookups


def test_unrank_validates_table_parameters():
    t = build_table(4, 2, 2)
    with pytest.raises(ValueError):
        unrank(0, 5, 2, 2, t)
