"""Exhaustive extremal searches over F_q matrices at desk scale.

Two quantities are searched, both over full-rank r x s matrices up to column
scaling and column order (so the space is multisets of canonical projective
points):

  - search_min_dependence(q, r, k, s): the smallest k-dependence of any such
    matrix, with a witness; ties go to the lexicographically least multiset.
  - search_ind(q, r, k, d): the largest s admitting a matrix of k-dependence
    at most d, found by growing s until two consecutive sizes are empty (the
    second size is a direct check that does not lean on monotonicity in s).

For d = 0 the scan restricts to repeat-free multisets: a repeated projective
point is a dependent pair, and any (r - k)-subset containing it is dependent,
so no multiset with a repeat can have zero k-dependence when k <= r - 2. That
restriction powers a depth-first search with two exact prunes: a candidate
point is rejected when it lies in the span of some (r - k - 1)-subset already
chosen (that is the complete characterization of creating a dependent subset,
since every smaller subset of a viable prefix is independent), and a prefix is
abandoned when its rank cannot reach r in the remaining slots. Span membership
is tested against a bitmask over vector codes, memoized per point subset.

Budgets count materialized candidates (scanned multisets or DFS prefixes);
whole-space checks happen before scanning so an over-budget request fails
fast. Parallel scans shard contiguous lex-rank ranges and merge by
(count, multiset) minimum, which makes results independent of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import kernel
from .combin import multiset_count, multiset_lex_successor, multiset_lex_unrank, split_range
from .errors import BudgetExceededError, NoFullRankMatrixError
from .field import make_field
from .linalg import GfMatrix, encode_vector, enumerate_projective_points
from .matroid import from_matrix, k_dependence

DEFAULT_SEARCH_BUDGET = 10**7
DEFAULT_CONSTRUCT_COLUMNS = 4096
_PARALLEL_THRESHOLD = 1 << 14


@dataclass(frozen=True)
class SearchResult:
    """An extremal value with its witness and search-space statistics."""

    kind: str  # "ind" or "mindep"
    q: int
    r: int
    k: int
    d: Fraction | None
    s: int | None
    value: Fraction | int
    witness: GfMatrix
    examined: int
    pruned: int


@dataclass(frozen=True)
class OptimalityRow:
    k: int
    constructed: Fraction
    minimum: Fraction

    @property
    def equal(self) -> bool:
        return self.constructed == self.minimum


@dataclass(frozen=True)
class OptimalityReport:
    q: int
    r: int
    n: int
    s: int
    rows: tuple[OptimalityRow, ...]

    @property
    def all_equal(self) -> bool:
        return all(row.equal for row in self.rows)


@dataclass(frozen=True)
class MonotonicityReport:
    q: int
    r: int
    k: int
    values: tuple[tuple[int, Fraction], ...]  # (s, D) pairs, s ascending

    @property
    def non_decreasing(self) -> bool:
        ds = [d for _, d in self.values]
        return all(a <= b for a, b in zip(ds, ds[1:]))


def projective_multiset(q: int, r: int, n: int, column_limit: int = DEFAULT_CONSTRUCT_COLUMNS) -> GfMatrix:
    """n copies of every canonical projective point of F_q^r, point-major."""
    field = make_field(q)
    if r < 1:
        raise ValueError(f"rank {r} must be at least 1")
    if n < 1:
        raise ValueError(f"copy count {n} must be at least 1")
    points = enumerate_projective_points(field, r)
    size = n * len(points)
    if size > column_limit:
        raise BudgetExceededError(f"{size} columns exceed the limit {column_limit}")
    return GfMatrix(field, r, [p for p in points for _ in range(n)])


def search_min_dependence(
    q: int,
    r: int,
    k: int,
    s: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    workers: int = 1,
) -> SearchResult:
    """Exact minimum k-dependence over full-rank r x s matrices over F_q."""
    field = make_field(q)
    if r < 1:
        raise ValueError(f"rank {r} must be at least 1")
    if not 0 <= k <= r:
        raise ValueError(f"k={k} outside [0, {r}]")
    if s < r:
        raise NoFullRankMatrixError(f"no full-rank {r} x {s} matrix exists")
    points = enumerate_projective_points(field, r)
    space = multiset_count(len(points), s)
    if space > budget:
        raise BudgetExceededError(f"{space} multisets exceed the budget {budget}")
    best_count, best_tuple, examined = _scan(q, r, k, s, "min", 0, 1, workers)
    if best_tuple is None:
        raise NoFullRankMatrixError(f"no full-rank {r} x {s} matrix exists")
    total = math.comb(s, r - k)
    witness = GfMatrix(field, r, [points[i] for i in best_tuple])
    value = Fraction(best_count, total)
    _recheck(witness, k, value)
    return SearchResult("mindep", q, r, k, None, s, value, witness, examined, space - examined)


def search_ind(
    q: int,
    r: int,
    k: int,
    d,
    budget: int = DEFAULT_SEARCH_BUDGET,
    workers: int = 1,
) -> SearchResult:
    """Exact largest s with a full-rank r x s matrix of k-dependence <= d."""
    field = make_field(q)
    if r < 1:
        raise ValueError(f"rank {r} must be at least 1")
    d = Fraction(d)
    if not 0 <= d < 1:
        raise ValueError(f"d={d} outside [0, 1)")
    if not 0 <= k <= r - 2:
        raise ValueError(
            f"k={k} outside [0, {r - 2}]: for k >= r - 1 every size is attainable"
        )
    points = enumerate_projective_points(field, r)
    examined = 0
    space = 0
    best = None
    empties = 0
    s = r
    while True:
        if d == 0:
            hit, used = _zero_dfs(field, points, r, k, s, budget - examined)
        else:
            step = multiset_count(len(points), s)
            if step > budget - examined:
                raise BudgetExceededError(f"size {s} needs {step} multisets, budget has {budget - examined} left")
            _, hit, used = _scan(q, r, k, s, "exists", d.numerator, d.denominator, workers)
        examined += used
        space += multiset_count(len(points), s)
        if hit is not None:
            best = (s, hit)
            empties = 0
        else:
            empties += 1
            if empties == 2:
                break
        s += 1
    ind, tup = best
    witness = GfMatrix(field, r, [points[i] for i in tup])
    matroid = from_matrix(witness)
    if matroid.rank != r or k_dependence(matroid, k) > d:
        raise AssertionError("witness failed its independent recheck")
    return SearchResult("ind", q, r, k, d, None, ind, witness, examined, max(0, space - examined))


def verify_optimality(
    q: int,
    r: int,
    n: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    workers: int = 1,
) -> OptimalityReport:
    """Compare the projective multiset's profile against the searched minima."""
    matrix = projective_multiset(q, r, n)
    matroid = from_matrix(matrix)
    rows = []
    for k in range(r + 1):
        constructed = k_dependence(matroid, k)
        minimum = search_min_dependence(q, r, k, matrix.ncols, budget, workers).value
        rows.append(OptimalityRow(k, constructed, minimum))
    return OptimalityReport(q, r, n, matrix.ncols, tuple(rows))


def verify_monotonicity(
    q: int,
    r: int,
    k: int,
    s_max: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    workers: int = 1,
) -> MonotonicityReport:
    """Tabulate D_q(r, k, s) for s = r..s_max and report the sequence."""
    values = []
    for s in range(r, s_max + 1):
        values.append((s, search_min_dependence(q, r, k, s, budget, workers).value))
    return MonotonicityReport(q, r, k, tuple(values))


def _recheck(witness: GfMatrix, k: int, value: Fraction) -> None:
    matroid = from_matrix(witness)
    if matroid.rank != witness.nrows or k_dependence(matroid, k) != value:
        raise AssertionError("witness failed its independent recheck")


def _scan(q, r, k, s, mode, num, den, workers):
    """Lex scan over all point multisets; returns (count, multiset, examined)."""
    field = make_field(q)
    space = multiset_count(len(enumerate_projective_points(field, r)), s)
    shards = workers if space >= _PARALLEL_THRESHOLD else 1
    jobs = [(q, r, k, s, lo, hi, mode, num, den) for lo, hi in split_range(space, shards)]
    if not jobs:
        return None, None, 0
    if len(jobs) == 1:
        results = [_scan_job(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            results = list(pool.map(_scan_job, jobs))
    examined = sum(got for _, _, got in results)
    found = [(cnt, tup) for cnt, tup, _ in results if tup is not None]
    if not found:
        return None, None, examined
    if mode == "min":
        cnt, tup = min(found)
    else:
        cnt, tup = found[0]  # shards are in lex order, first hit is lex-least
    return cnt, tup, examined


def _scan_job(job):
    q, r, k, s, lo, hi, mode, num, den = job
    field = make_field(q)
    points = enumerate_projective_points(field, r)
    blobs = [bytes(p) for p in points]
    npts = len(points)
    m = r - k
    total = math.comb(s, m)
    sel = bytes(range(s))
    start = bytes(range(m))
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    allow = (num * total) // den  # qualify iff count <= allow
    best_count = None
    best_tuple = None
    examined = 0
    cur = list(multiset_lex_unrank(lo, npts, s))
    for _ in range(lo, hi):
        examined += 1
        data = b"".join(blobs[i] for i in cur)
        if kernel.rank(data, r, sel, q, add, mul, neg, inv) == r:
            if mode == "min":
                limit = 0 if best_count is None else best_count
                cnt = kernel.count_dependent(data, r, s, m, q, add, mul, neg, inv, start, total, limit)
                if best_count is None or cnt < best_count:
                    best_count, best_tuple = cnt, tuple(cur)
                    if cnt == 0:
                        break
            else:
                cnt = kernel.count_dependent(data, r, s, m, q, add, mul, neg, inv, start, total, allow + 1)
                if cnt <= allow:
                    best_count, best_tuple = cnt, tuple(cur)
                    break
        multiset_lex_successor(cur, npts)
    return best_count, best_tuple, examined


def _zero_dfs(field, points, r, k, s, budget):
    """First (lex-least) repeat-free multiset of size s with zero k-dependence.

    Returns (point-index tuple or None, candidates materialized).
    """
    q = field.q
    m = r - k
    npts = len(points)
    codes = [encode_vector(q, p) for p in points]
    add, mul = field.add_table, field.mul_table
    span_memo: dict[tuple[int, ...], int] = {}
    chosen: list[int] = []
    echelon: list[tuple[int, tuple[int, ...]]] = []
    nodes = 0

    def reduce_point(vec):
        v = list(vec)
        for piv, bv in echelon:
            c = v[piv]
            if c:
                for i in range(piv, r):
                    v[i] = add[v[i] * q + field.neg_table[mul[c * q + bv[i]]]]
        for piv, x in enumerate(v):
            if x:
                scale = field.inv_table[x]
                return piv, tuple(mul[scale * q + y] for y in v)
        return None

    def span_mask(idx: tuple[int, ...]) -> int:
        mask = span_memo.get(idx)
        if mask is None:
            combos = [(0,) * r]
            for i in idx:
                pv = points[i]
                combos = [
                    tuple(add[w[t] * q + mul[lam * q + pv[t]]] for t in range(r))
                    for w in combos
                    for lam in range(q)
                ]
            mask = 0
            for w in combos:
                mask |= 1 << encode_vector(q, w)
            span_memo[idx] = mask
        return mask

    def extend(start: int, rank_now: int, forbidden: int):
        nonlocal nodes
        t = len(chosen)
        if t == s:
            return tuple(chosen)
        for p in range(start, npts - (s - t) + 1):
            if t + 1 <= m:
                red = reduce_point(points[p])
                if red is None:
                    continue
            else:
                if (forbidden >> codes[p]) & 1:
                    continue
                red = reduce_point(points[p])
            rank_after = rank_now + (1 if red is not None else 0)
            if rank_after + (s - t - 1) < r:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"zero-dependence search exceeded the budget {budget}")
            new_forbidden = forbidden
            if m > 2 and t >= m - 2:
                for rest in combinations(chosen, m - 2):
                    new_forbidden |= span_mask(tuple(sorted(rest + (p,))))
            chosen.append(p)
            if red is not None:
                echelon.append(red)
            hit = extend(p + 1, rank_after, new_forbidden)
            chosen.pop()
            if red is not None:
                echelon.pop()
            if hit is not None:
                return hit
        return None

    return extend(0, 0, 0), nodes
