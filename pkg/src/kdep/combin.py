"""Ranking of subsets and multisets, colex and lex flavours.

Subsets of {0..n-1} of size m are ordered colexicographically: compare the
largest elements first. The rank of a sorted subset (c_0 < ... < c_{m-1}) is
sum(C(c_j, j+1)), a bijection onto [0, C(n, m)). Multisets ride on top via the
stars-and-bars shift (b_0 <= ... <= b_{m-1}) <-> (b_j + j). Contiguous rank
ranges are what the parallel code shards.

The kernel iterates column subsets in colex order. The extremal searches
instead walk multisets in plain lexicographic order of their non-decreasing
tuples, so "first hit wins" coincides with the documented tie-break; the lex
functions below serve those.
"""

from __future__ import annotations

import math


def subset_rank(subset) -> int:
    """Colex rank of a sorted tuple of distinct non-negative integers."""
    rank = 0
    for j, c in enumerate(subset):
        rank += math.comb(c, j + 1)
    return rank


def subset_unrank(index: int, n: int, m: int) -> tuple[int, ...]:
    """Inverse of subset_rank for m-subsets of {0..n-1}."""
    if m < 0 or m > n:
        raise IndexError(f"no {m}-subsets of a {n}-set")
    total = math.comb(n, m)
    if index < 0 or index >= total:
        raise IndexError(f"subset rank {index} out of range [0, {total})")
    out = []
    c = n
    for j in range(m, 0, -1):
        # largest c with C(c, j) <= index
        c -= 1
        while math.comb(c, j) > index:
            c -= 1
        out.append(c)
        index -= math.comb(c, j)
    out.reverse()
    return tuple(out)


def subset_successor(subset: list[int]) -> None:
    """Advance a sorted subset to its colex successor, in place."""
    m = len(subset)
    for j in range(m):
        if j + 1 == m or subset[j] + 1 < subset[j + 1]:
            subset[j] += 1
            for i in range(j):
                subset[i] = i
            return
    raise IndexError("no colex successor")


def multiset_count(n: int, m: int) -> int:
    """Number of size-m multisets drawn from n symbols."""
    return math.comb(n + m - 1, m)


def multiset_unrank(index: int, n: int, m: int) -> tuple[int, ...]:
    """Non-decreasing tuple for the multiset of colex rank `index`."""
    subset = subset_unrank(index, n + m - 1, m)
    return tuple(c - j for j, c in enumerate(subset))


def multiset_rank(multiset) -> int:
    return subset_rank(tuple(b + j for j, b in enumerate(multiset)))


def subset_lex_unrank(index: int, n: int, m: int) -> tuple[int, ...]:
    """m-subset of {0..n-1} at lexicographic rank `index`."""
    if m < 0 or m > n:
        raise IndexError(f"no {m}-subsets of a {n}-set")
    total = math.comb(n, m)
    if index < 0 or index >= total:
        raise IndexError(f"subset rank {index} out of range [0, {total})")
    out = []
    v = 0
    for j in range(m):
        while True:
            below = math.comb(n - 1 - v, m - 1 - j)
            if index < below:
                break
            index -= below
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def subset_lex_rank(subset, n: int) -> int:
    rank = 0
    prev = -1
    m = len(subset)
    for j, x in enumerate(subset):
        for v in range(prev + 1, x):
            rank += math.comb(n - 1 - v, m - 1 - j)
        prev = x
    return rank


def multiset_lex_unrank(index: int, n: int, m: int) -> tuple[int, ...]:
    """Non-decreasing tuple at lex rank `index` among m-multisets of n symbols."""
    subset = subset_lex_unrank(index, n + m - 1, m)
    return tuple(c - j for j, c in enumerate(subset))


def multiset_lex_rank(multiset, n: int) -> int:
    m = len(multiset)
    return subset_lex_rank(tuple(b + j for j, b in enumerate(multiset)), n + m - 1)


def multiset_lex_successor(multiset: list[int], n: int) -> bool:
    """Advance to the lex successor in place; False at the last multiset."""
    m = len(multiset)
    for j in range(m - 1, -1, -1):
        if multiset[j] < n - 1:
            v = multiset[j] + 1
            for i in range(j, m):
                multiset[i] = v
            return True
    return False


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Partition [0, total) into at most `parts` contiguous non-empty ranges."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    ranges = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        if hi > lo:
            ranges.append((lo, hi))
        lo = hi
    return ranges
