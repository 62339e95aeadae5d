import math
from itertools import combinations, combinations_with_replacement

import pytest

from kdep.combin import (
    multiset_count,
    multiset_lex_rank,
    multiset_lex_successor,
    multiset_lex_unrank,
    multiset_rank,
    multiset_unrank,
    split_range,
    subset_lex_rank,
    subset_lex_unrank,
    subset_rank,
    subset_successor,
    subset_unrank,
)


def colex_sorted(iterable):
    return sorted(iterable, key=lambda t: tuple(reversed(t)))


@pytest.mark.parametrize("n,m", [(5, 0), (5, 1), (5, 3), (6, 6), (8, 4)])
def test_subset_colex_roundtrip(n, m):
    subsets = colex_sorted(combinations(range(n), m))
    for index, subset in enumerate(subsets):
        assert subset_rank(subset) == index
        assert subset_unrank(index, n, m) == subset


@pytest.mark.parametrize("n,m", [(5, 1), (5, 3), (8, 4)])
def test_subset_successor_walks_colex_order(n, m):
    subsets = colex_sorted(combinations(range(n), m))
    cur = list(subsets[0])
    for expected in subsets[1:]:
        subset_successor(cur)
        assert tuple(cur) == expected
    # the order is unbounded: past the last m-subset of {0..n-1} comes the
    # first one that contains n
    subset_successor(cur)
    assert tuple(cur) == tuple(range(m - 1)) + (n,)
    with pytest.raises(IndexError):
        subset_successor([])


@pytest.mark.parametrize("n,m", [(5, 0), (5, 2), (6, 6), (9, 3)])
def test_subset_lex_roundtrip(n, m):
    subsets = list(combinations(range(n), m))  # already lex sorted
    for index, subset in enumerate(subsets):
        assert subset_lex_rank(subset, n) == index
        assert subset_lex_unrank(index, n, m) == subset


def test_subset_unrank_range_errors():
    with pytest.raises(IndexError):
        subset_unrank(10, 5, 2)
    with pytest.raises(IndexError):
        subset_unrank(-1, 5, 2)
    with pytest.raises(IndexError):
        subset_lex_unrank(10, 5, 2)
    with pytest.raises(IndexError):
        subset_unrank(0, 3, 4)


@pytest.mark.parametrize("n,m", [(3, 0), (3, 2), (4, 3), (5, 2)])
def test_multiset_roundtrips_both_orders(n, m):
    all_multisets = list(combinations_with_replacement(range(n), m))
    assert len(all_multisets) == multiset_count(n, m)
    for index, ms in enumerate(all_multisets):  # lex order
        assert multiset_lex_rank(ms, n) == index
        assert multiset_lex_unrank(index, n, m) == ms
    for index, ms in enumerate(colex_sorted(all_multisets)):
        assert multiset_rank(ms) == index
        assert multiset_unrank(index, n, m) == ms


def test_multiset_lex_successor_walks_lex_order():
    n, m = 4, 3
    all_multisets = list(combinations_with_replacement(range(n), m))
    cur = list(all_multisets[0])
    for expected in all_multisets[1:]:
        assert multiset_lex_successor(cur, n)
        assert tuple(cur) == expected
    assert not multiset_lex_successor(cur, n)


def test_split_range_covers_and_orders():
    for total in (0, 1, 5, 17, 100):
        for parts in (1, 2, 3, 7, 150):
            ranges = split_range(total, parts)
            flat = [i for lo, hi in ranges for i in range(lo, hi)]
            assert flat == list(range(total))
            assert all(hi > lo for lo, hi in ranges)
            assert len(ranges) <= max(parts, 1)


def test_split_range_balance():
    ranges = split_range(10, 3)
    sizes = [hi - lo for lo, hi in ranges]
    assert max(sizes) - min(sizes) <= 1
    assert sum(sizes) == 10


def test_counts_match_comb():
    assert multiset_count(7, 3) == math.comb(9, 3)
    assert multiset_count(1, 5) == 1
