"""Seeded random-matrix sampling and empirical checks of the mean/Markov bounds.

Sampling model: every column is an i.i.d. uniform draw from the q^r - 1
nonzero vectors of F_q^r; rank deficiency is allowed, and k-dependence of a
sample is always counted against the ambient r rows (subsets of size r - k),
not against the sample's own matroid rank. That convention is what makes the
exhaustive mean over all matrices equal 1 - independence_probability exactly.

Determinism contract: draw j of sample i is a pure function of (seed, i*s + j)
through a splitmix64-style counter mix, so results are byte-identical across
runs and worker counts; workers shard contiguous sample-index ranges and the
histograms merge by addition.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import kernel
from .bounds import markov_dependence_bound
from .combin import split_range
from .field import Field, make_field
from .linalg import GfMatrix, decode_vector
from .matroid import DEFAULT_SUBSET_BUDGET
from .errors import BudgetExceededError

_GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1
_PARALLEL_THRESHOLD = 1 << 12


def _mix(x: int) -> int:
    x &= _MASK
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def sample_codes(q: int, r: int, s: int, seed: int, index: int) -> tuple[int, ...]:
    """Column codes of sample `index`: s uniform draws from [1, q^r)."""
    span = q**r - 1
    base = index * s
    return tuple(
        _mix(seed + (base + j + 1) * _GOLDEN) % span + 1 for j in range(s)
    )


def sample_matrix(field: Field, r: int, s: int, seed: int, index: int = 0) -> GfMatrix:
    """One random matrix with i.i.d. uniform nonzero columns."""
    return GfMatrix.from_codes(field, r, sample_codes(field.q, r, s, seed, index))


@dataclass(frozen=True)
class SampleConfig:
    q: int
    r: int
    s: int
    k: int
    trials: int
    seed: int
    workers: int = 1

    def __post_init__(self):
        make_field(self.q)
        if self.trials < 1:
            raise ValueError(f"trials {self.trials} must be at least 1")
        if not 0 <= self.k <= self.r:
            raise ValueError(f"k={self.k} outside [0, {self.r}]")
        if self.s < self.r - self.k:
            raise ValueError(
                f"s={self.s} is smaller than {self.r - self.k}, so no subsets exist"
            )
        if not 0 <= self.seed <= _MASK:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Exact histogram of dependent-subset counts over the sampled matrices."""

    config: SampleConfig
    subsets: int  # C(s, r - k), the per-sample denominator
    counts: tuple[tuple[int, int], ...]  # (dependent count, multiplicity), sorted

    def mean(self) -> Fraction:
        hit = sum(dep * mult for dep, mult in self.counts)
        return Fraction(hit, self.subsets * self.config.trials)

    def tail(self, threshold) -> Fraction:
        """Fraction of samples with dependence strictly above the threshold."""
        threshold = Fraction(threshold)
        over = sum(
            mult for dep, mult in self.counts if Fraction(dep, self.subsets) > threshold
        )
        return Fraction(over, self.config.trials)

    def quantile(self, alpha) -> Fraction:
        """Smallest sampled dependence value with CDF >= alpha."""
        alpha = Fraction(alpha)
        seen = 0
        for dep, mult in self.counts:
            seen += mult
            if Fraction(seen, self.config.trials) >= alpha:
                return Fraction(dep, self.subsets)
        return Fraction(self.counts[-1][0], self.subsets)


def estimate_distribution(config: SampleConfig, budget: int = DEFAULT_SUBSET_BUDGET) -> EmpiricalDistribution:
    """Sample config.trials matrices and histogram their exact k-dependence."""
    m = config.r - config.k
    subsets = math.comb(config.s, m)
    if subsets * config.trials > budget:
        raise BudgetExceededError(
            f"{config.trials} samples x {subsets} subsets exceed the budget {budget}"
        )
    shards = config.workers if config.trials >= _PARALLEL_THRESHOLD else 1
    jobs = [
        (config.q, config.r, config.s, config.k, config.seed, lo, hi)
        for lo, hi in split_range(config.trials, shards)
    ]
    if len(jobs) == 1:
        merged = _sample_shard(jobs[0])
    else:
        merged = Counter()
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            for part in pool.map(_sample_shard, jobs):
                merged.update(part)
    return EmpiricalDistribution(config, subsets, tuple(sorted(merged.items())))


def _sample_shard(job) -> Counter:
    q, r, s, k, seed, lo, hi = job
    field = make_field(q)
    m = r - k
    total = math.comb(s, m)
    start = bytes(range(m))
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    hist = Counter()
    for index in range(lo, hi):
        codes = sample_codes(q, r, s, seed, index)
        data = bytes(x for c in codes for x in decode_vector(q, r, c))
        dep = kernel.count_dependent(data, r, s, m, q, add, mul, neg, inv, start, total, 0)
        hist[dep] += 1
    return hist


@dataclass(frozen=True)
class MarkovCheckRow:
    p: Fraction
    bound: Fraction  # mean / p, the dependence threshold
    vacuous: bool
    tail: Fraction  # observed fraction of samples above the bound
    quantile: Fraction  # observed (1 - p)-quantile
    allowed: float  # p + 3 * binomial sigma

    @property
    def ok(self) -> bool:
        tail_ok = float(self.tail) <= self.allowed
        quantile_ok = self.vacuous or self.quantile <= self.bound
        return tail_ok and quantile_ok


@dataclass(frozen=True)
class MarkovReport:
    distribution: EmpiricalDistribution
    rows: tuple[MarkovCheckRow, ...]

    @property
    def all_ok(self) -> bool:
        return all(row.ok for row in self.rows)


def check_markov(config: SampleConfig, p_grid, distribution: EmpiricalDistribution | None = None) -> MarkovReport:
    """Check the sampled dependence tail against mean/p for each p in the grid."""
    if distribution is None:
        distribution = estimate_distribution(config)
    rows = []
    for p in p_grid:
        p = Fraction(p)
        bound = markov_dependence_bound(config.q, config.r, config.k, p)
        sigma = math.sqrt(float(p) * float(1 - p) / config.trials)
        rows.append(
            MarkovCheckRow(
                p=p,
                bound=bound.value,
                vacuous=bound.vacuous,
                tail=distribution.tail(bound.value),
                quantile=distribution.quantile(1 - p),
                allowed=float(p) + 3 * sigma,
            )
        )
    return MarkovReport(distribution, tuple(rows))


def exhaustive_mean_dependence(q: int, r: int, s: int, k: int) -> Fraction:
    """Mean k-dependence over ALL (q^r - 1)^s nonzero-column matrices, exact.

    The sampling model's population mean, enumerated rather than sampled;
    dependence is counted against ambient r, as everywhere in this module.
    """
    field = make_field(q)
    m = r - k
    total = math.comb(s, m)
    if total < 1:
        raise ValueError(f"s={s} is smaller than {m}, so no subsets exist")
    start = bytes(range(m))
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    hit = 0
    matrices = 0
    for codes in product(range(1, q**r), repeat=s):
        data = bytes(x for c in codes for x in decode_vector(q, r, c))
        hit += kernel.count_dependent(data, r, s, m, q, add, mul, neg, inv, start, total, 0)
        matrices += 1
    return Fraction(hit, matrices * total)


def exhaustive_independence_probability(q: int, r: int, k: int) -> Fraction:
    """Pr[r - k uniform nonzero vectors are independent], by full enumeration."""
    field = make_field(q)
    if not 0 <= k <= r:
        raise ValueError(f"k={k} outside [0, {r}]")
    m = r - k
    sel = bytes(range(m))
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    independent = 0
    tuples = 0
    for codes in product(range(1, q**r), repeat=m):
        data = bytes(x for c in codes for x in decode_vector(q, r, c))
        if kernel.rank(data, r, sel, q, add, mul, neg, inv) == m:
            independent += 1
        tuples += 1
    return Fraction(independent, tuples)
