"""Closed-form bounds on dependence quantities and the obstruction certifier.

Conventions, fixed throughout:
  - zero_dependence_size_bound(q, r, k) = q^(k+1) * (r - k - 1) is an upper
    bound candidate for the largest size of a q-representable rank-r matroid
    whose k-dependence is zero; it needs k <= r - 2.
  - independence_probability(q, r, k) is the exact probability that r - k
    vectors drawn uniformly from the nonzero vectors of F_q^r are linearly
    independent: prod_{i=0}^{r-k-1} (q^r - q^i) / (q^r - 1).
  - mean_dependence(q, r, k) = 1 - independence_probability(q, r, k), which
    equals the exact mean k-dependence (against ambient r) over all matrices
    with s >= r - k nonzero columns.
  - Markov-style bounds divide the mean by a probability or a threshold; a
    value above 1 is reported as vacuous, never clamped.

The certifier combines the closed form with brute-force search tables. It
fires NotRepresentable when size > a size bound or when d(M,k) < a dependence
floor, strictly; equality never fires. It never asserts representability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import make_field
from .matroid import DependenceProfile, Matroid, dependence_profile

PROVENANCE_CLOSED_FORM = "closed-form"
PROVENANCE_TABLE = "brute-force-table"


def _check_k(r: int, k: int) -> None:
    if not 0 <= k <= r:
        raise ValueError(f"k={k} outside [0, {r}]")


def zero_dependence_size_bound(q: int, r: int, k: int) -> int:
    """q^(k+1) * (r - k - 1); defined only for 0 <= k <= r - 2."""
    make_field(q)
    if r < 1:
        raise ValueError(f"rank {r} must be at least 1")
    if not 0 <= k <= r - 2:
        raise ValueError(f"k={k} outside [0, {r - 2}]: the bound needs r - k - 1 >= 1")
    return q ** (k + 1) * (r - k - 1)


def independence_probability(q: int, r: int, k: int) -> Fraction:
    """Exact Pr[r - k uniform nonzero vectors of F_q^r are independent]."""
    make_field(q)
    if r < 1:
        raise ValueError(f"rank {r} must be at least 1")
    _check_k(r, k)
    total = q**r - 1
    prob = Fraction(1)
    for i in range(r - k):
        prob *= Fraction(q**r - q**i, total)
    return prob


def mean_dependence(q: int, r: int, k: int) -> Fraction:
    """1 - independence_probability; the exact mean k-dependence of a random
    nonzero-column matrix, for any number of columns >= r - k."""
    return 1 - independence_probability(q, r, k)


@dataclass(frozen=True)
class MarkovBound:
    value: Fraction
    vacuous: bool


def markov_dependence_bound(q: int, r: int, k: int, p) -> MarkovBound:
    """Bound on the (1 - p)-quantile of k-dependence: mean / p."""
    p = Fraction(p)
    if not 0 < p <= 1:
        raise ValueError(f"p={p} outside (0, 1]")
    value = mean_dependence(q, r, k) / p
    return MarkovBound(value, value > 1)


def markov_probability_bound(q: int, r: int, k: int, d) -> MarkovBound:
    """Bound on Pr[k-dependence > d]: mean / d."""
    d = Fraction(d)
    if not 0 < d <= 1:
        raise ValueError(f"d={d} outside (0, 1]")
    value = mean_dependence(q, r, k) / d
    return MarkovBound(value, value > 1)


@dataclass(frozen=True)
class Trigger:
    """The inequality that fired: size > bound, or dependence < floor."""

    kind: str  # "size" or "dependence"
    k: int
    lhs: Fraction
    rhs: Fraction
    provenance: str

    def describe(self) -> str:
        if self.kind == "size":
            return f"k = {self.k}: size {self.lhs} > size bound {self.rhs} ({self.provenance})"
        return f"k = {self.k}: d(M,{self.k}) = {self.lhs} < dependence floor {self.rhs} ({self.provenance})"


@dataclass(frozen=True)
class Certificate:
    q: int
    rank: int
    size: int
    profile: DependenceProfile
    verdict: str  # "NotRepresentable" or "Inconclusive"
    trigger: Trigger | None

    @property
    def not_representable(self) -> bool:
        return self.verdict == "NotRepresentable"


def certify_nonrepresentable(matroid: Matroid, q: int, table=None, budget=None, workers: int = 1) -> Certificate:
    """Test every k for an obstruction to representability over F_q.

    Per k, in order: the closed-form size bound (needs k <= r - 2 and
    d(M,k) = 0), then table size rows with allowance >= d(M,k) (tightest
    applies), then table dependence rows at size <= s (largest floor applies).
    The first firing inequality is recorded; Inconclusive when none fires.
    """
    make_field(q)
    kwargs = {} if budget is None else {"budget": budget}
    profile = dependence_profile(matroid, workers=workers, **kwargs)
    r, s = matroid.rank, matroid.size
    trigger = None
    for k in range(r + 1):
        d_k = profile[k]
        if k <= r - 2 and d_k == 0:
            bound = zero_dependence_size_bound(q, r, k)
            if s > bound:
                trigger = Trigger("size", k, Fraction(s), Fraction(bound), PROVENANCE_CLOSED_FORM)
                break
        if table is not None:
            row = table.best_size_bound(q, r, k, d_k)
            if row is not None and s > row.value:
                trigger = Trigger("size", k, Fraction(s), Fraction(row.value), PROVENANCE_TABLE)
                break
            row = table.best_dependence_bound(q, r, k, s)
            if row is not None and d_k < row.value:
                trigger = Trigger("dependence", k, d_k, row.value, PROVENANCE_TABLE)
                break
    verdict = "NotRepresentable" if trigger is not None else "Inconclusive"
    return Certificate(q, r, s, profile, verdict, trigger)
