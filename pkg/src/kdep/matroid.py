"""Matroids and their k-dependence profiles.

For a matroid M of rank r on s elements, d(M, k) is the fraction of
(r - k)-element subsets of the ground set that are dependent, for k = 0..r.
d(M, r) concerns the empty set and is always 0. Every profile satisfies
zero-propagation: d(M, k) = 0 forces d(M, k') = 0 for k' > k, because subsets
of independent sets are independent. Profiles store exact counts.

Two constructions are supported: column matroids of matrices over F_q
(columns with equal values are distinct ground-set elements) and explicit
basis families, validated against the basis-exchange axiom.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import kernel
from .combin import split_range, subset_rank, subset_unrank  # noqa: F401  (re-exported)
from .errors import BasisSizeError, BudgetExceededError, EmptyGroundSetError, ExchangeAxiomError
from .linalg import GfMatrix, rank

DEFAULT_SUBSET_BUDGET = 10**9
_PARALLEL_THRESHOLD = 1 << 16
DEFAULT_VALIDATE_LIMIT = 12


@dataclass(frozen=True)
class DependenceProfile:
    """Exact dependence counts (dependent, total) for k = 0..rank."""

    rank: int
    size: int
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.counts) != self.rank + 1:
            raise ValueError("profile needs one entry per k in 0..rank")
        seen_zero = False
        for k, (dep, total) in enumerate(self.counts):
            expect = math.comb(self.size, self.rank - k)
            if total != expect:
                raise ValueError(f"k={k}: total {total} != C({self.size}, {self.rank - k})")
            if not 0 <= dep <= total:
                raise ValueError(f"k={k}: dependent count {dep} outside [0, {total}]")
            if seen_zero and dep:
                raise ValueError(f"zero-propagation violated at k={k}")
            if dep == 0:
                seen_zero = True

    def __getitem__(self, k: int) -> Fraction:
        dep, total = self.counts[k]
        return Fraction(dep, total)

    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, t) for d, t in self.counts)


class Matroid:
    """Either the column matroid of a GfMatrix or an explicit basis family."""

    __slots__ = ("size", "rank", "matrix", "bases")

    def __init__(self, size: int, rank_: int, matrix: GfMatrix | None, bases):
        self.size = size
        self.rank = rank_
        self.matrix = matrix
        self.bases = bases

    @property
    def kind(self) -> str:
        return "matrix" if self.matrix is not None else "bases"

    def is_independent(self, subset) -> bool:
        subset = tuple(subset)
        for i in subset:
            if not 0 <= i < self.size:
                raise IndexError(f"element {i} out of range [0, {self.size})")
        if self.matrix is not None:
            if len(set(subset)) != len(subset):
                return False
            return rank(self.matrix, subset) == len(subset)
        need = frozenset(subset)
        if len(need) != len(subset) or len(need) > self.rank:
            return False
        return any(need <= b for b in self.bases)

    def __repr__(self):
        return f"Matroid(kind={self.kind}, r={self.rank}, s={self.size})"


def from_matrix(matrix: GfMatrix) -> Matroid:
    """Column matroid of a matrix; rank is the matrix rank, loops allowed."""
    if matrix.ncols == 0:
        raise EmptyGroundSetError("matrix has no columns")
    return Matroid(matrix.ncols, rank(matrix), matrix, None)


def from_bases(
    size: int,
    rank_: int,
    bases,
    trusted: bool = False,
    validate_limit: int = DEFAULT_VALIDATE_LIMIT,
) -> Matroid:
    """Matroid from an explicit basis family.

    The basis-exchange axiom is checked exhaustively when size <= validate_limit;
    larger ground sets are accepted only with trusted=True.
    """
    if size < 1:
        raise EmptyGroundSetError("ground set is empty")
    family = {frozenset(b) for b in bases}
    if not family:
        raise ValueError("at least one basis is required")
    for b in family:
        if len(b) != rank_:
            raise BasisSizeError(f"basis {sorted(b)} does not have {rank_} elements")
        for i in b:
            if not 0 <= i < size:
                raise IndexError(f"basis element {i} out of range [0, {size})")
    if size > validate_limit:
        if not trusted:
            raise ValueError(
                f"ground set of size {size} exceeds the validation limit {validate_limit}; "
                "pass trusted=True to accept the family unchecked"
            )
    else:
        _check_exchange(family)
    return Matroid(size, rank_, None, frozenset(family))


def _check_exchange(family):
    for a_set in family:
        for b_set in family:
            for a in a_set - b_set:
                base = a_set - {a}
                if not any(base | {b} in family for b in b_set - a_set):
                    raise ExchangeAxiomError(a_set, a, b_set)


def k_dependence(
    matroid: Matroid,
    k: int,
    budget: int = DEFAULT_SUBSET_BUDGET,
    workers: int = 1,
) -> Fraction:
    """Exact d(M, k), the fraction of dependent (rank - k)-subsets."""
    if not 0 <= k <= matroid.rank:
        raise ValueError(f"k={k} outside [0, {matroid.rank}]")
    dep, total = _dependence_counts(matroid, k, budget, workers)
    return Fraction(dep, total)


def dependence_profile(
    matroid: Matroid,
    budget: int = DEFAULT_SUBSET_BUDGET,
    workers: int = 1,
) -> DependenceProfile:
    """The full profile d(M, k) for k = 0..rank, exact."""
    spent = 0
    counts = []
    for k in range(matroid.rank + 1):
        spent += math.comb(matroid.size, matroid.rank - k)
        if spent > budget:
            raise BudgetExceededError(
                f"profile needs {spent}+ subset evaluations, budget is {budget}", k=k
            )
        counts.append(_dependence_counts(matroid, k, budget, workers))
    return DependenceProfile(matroid.rank, matroid.size, tuple(counts))


def _dependence_counts(matroid: Matroid, k: int, budget: int, workers: int):
    m = matroid.rank - k
    total = math.comb(matroid.size, m)
    if total > budget:
        raise BudgetExceededError(
            f"k={k} needs {total} subset evaluations, budget is {budget}", k=k
        )
    if m == 0:
        return (0, 1)
    if matroid.matrix is not None:
        dep = _count_dependent_matrix(matroid.matrix, m, total, workers)
    else:
        dep = sum(1 for sub in combinations(range(matroid.size), m) if not matroid.is_independent(sub))
    return (dep, total)


def _count_dependent_matrix(matrix: GfMatrix, m: int, total: int, workers: int) -> int:
    f = matrix.field
    jobs = [
        (
            matrix.data,
            matrix.nrows,
            matrix.ncols,
            m,
            f.q,
            f.add_table,
            f.mul_table,
            f.neg_table,
            f.inv_table,
            bytes(subset_unrank(lo, matrix.ncols, m)),
            hi - lo,
        )
        for lo, hi in split_range(total, workers)
    ]
    if len(jobs) == 1 or total < _PARALLEL_THRESHOLD:
        return sum(_count_shard(job) for job in jobs)
    with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
        return sum(pool.map(_count_shard, jobs))


def _count_shard(job) -> int:
    data, nrows, ncols, m, q, add, mul, neg, inv, first, count = job
    return kernel.count_dependent(data, nrows, ncols, m, q, add, mul, neg, inv, first, count, 0)


def matroid_bases(matroid: Matroid):
    """All bases as frozensets (exhaustive; meant for small ground sets)."""
    if matroid.bases is not None:
        return sorted(matroid.bases, key=sorted)
    return [
        frozenset(sub)
        for sub in combinations(range(matroid.size), matroid.rank)
        if matroid.is_independent(sub)
    ]
