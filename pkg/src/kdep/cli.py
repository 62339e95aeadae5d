"""Command-line front-end.

Exit codes: 0 success (including an Inconclusive certificate), 2 document
parse error (reported with line and column), 3 budget exceeded, 4 unsupported
field order, 5 invalid parameters, 10 a non-representability obstruction was
found (scripting-friendly: distinct from operational failures).

Worker count: --workers flag, else the KDEP_WORKERS environment variable,
else all available cores. The worker count never changes any output byte.
All file output is UTF-8 with LF line endings.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction
from functools import wraps

import click

from .bounds import (
    certify_nonrepresentable,
    independence_probability,
    markov_dependence_bound,
    markov_probability_bound,
    mean_dependence,
    zero_dependence_size_bound,
)
from .documents import TABLE_HEADER, MatroidDocument, OracleTable, TableRow
from .errors import (
    BudgetExceededError,
    DocumentError,
    FieldTooLargeError,
    NotPrimePowerError,
)
from .matroid import DEFAULT_SUBSET_BUDGET, dependence_profile, from_matrix
from .montecarlo import SampleConfig, check_markov, estimate_distribution
from .search import (
    DEFAULT_CONSTRUCT_COLUMNS,
    DEFAULT_SEARCH_BUDGET,
    projective_multiset,
    search_ind,
    search_min_dependence,
)

_QUANTILES = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10))


def _dec(x) -> str:
    return "%.12g" % float(x)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _both(x: Fraction) -> str:
    return f"{_frac(x)} = {_dec(x)}"


class FractionParam(click.ParamType):
    name = "fraction"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


FRACTION = FractionParam()


def _exit_codes(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DocumentError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except BudgetExceededError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except (NotPrimePowerError, FieldTooLargeError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)
        except (ValueError, ZeroDivisionError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(5)

    return wrapper


def _resolve_workers(flag: int | None) -> int:
    if flag is None:
        env = os.environ.get("KDEP_WORKERS", "").strip()
        flag = int(env) if env else (os.cpu_count() or 1)
    if flag < 1:
        raise ValueError(f"worker count {flag} must be at least 1")
    return flag


@click.group()
def main():
    """Dependence profiles, bounds, and searches for matrices over F_q."""


@main.command()
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@click.option("--budget", type=int, default=DEFAULT_SUBSET_BUDGET, show_default=True)
@click.option("--workers", type=int, default=None, help="Defaults to KDEP_WORKERS or all cores.")
@_exit_codes
def profile(input, budget, workers):
    """Print the exact dependence profile of a matroid document."""
    doc = MatroidDocument.parse_path(input)
    matroid = doc.to_matroid()
    prof = dependence_profile(matroid, budget=budget, workers=_resolve_workers(workers))
    if doc.name:
        click.echo(f"name = {doc.name}")
    click.echo(f"r = {prof.rank}")
    click.echo(f"s = {prof.size}")
    for k, (dep, total) in enumerate(prof.counts):
        click.echo(f"d(M,{k}) = {dep}/{total} = {_dec(Fraction(dep, total))}")


@main.command()
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@click.option("--q", "orders", type=int, multiple=True, required=True, help="Field order; repeatable.")
@click.option("--tables", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--budget", type=int, default=DEFAULT_SUBSET_BUDGET, show_default=True)
@click.option("--workers", type=int, default=None)
@_exit_codes
def certify(input, orders, tables, budget, workers):
    """Test a matroid for non-representability obstructions over each field."""
    doc = MatroidDocument.parse_path(input)
    matroid = doc.to_matroid()
    table = OracleTable.parse_path(tables) if tables else None
    nworkers = _resolve_workers(workers)
    fired = False
    for q in orders:
        cert = certify_nonrepresentable(matroid, q, table=table, budget=budget, workers=nworkers)
        click.echo(f"q = {q}: {cert.verdict}")
        if cert.trigger is not None:
            fired = True
            click.echo(f"  {cert.trigger.describe()}")
    sys.exit(10 if fired else 0)


@main.command()
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--p", type=FRACTION, default=None, help="Quantile parameter in (0, 1].")
@click.option("--d", type=FRACTION, default=None, help="Dependence threshold in (0, 1].")
@_exit_codes
def bounds(q, r, k, p, d):
    """Print the closed-form bound values for (q, r, k)."""
    pi = independence_probability(q, r, k)
    click.echo(f"q = {q}, r = {r}, k = {k}")
    if k <= r - 2:
        click.echo(f"size bound (d = 0): {zero_dependence_size_bound(q, r, k)}")
    else:
        click.echo("size bound (d = 0): not applicable (k > r - 2)")
    click.echo(f"independence probability = {_both(pi)}")
    click.echo(f"mean dependence = {_both(mean_dependence(q, r, k))}")
    if p is not None:
        bound = markov_dependence_bound(q, r, k, p)
        tag = " (vacuous)" if bound.vacuous else ""
        click.echo(f"markov dependence bound (p = {_frac(p)}) = {_both(bound.value)}{tag}")
    if d is not None:
        bound = markov_probability_bound(q, r, k, d)
        tag = " (vacuous)" if bound.vacuous else ""
        click.echo(f"markov probability bound (d = {_frac(d)}) = {_both(bound.value)}{tag}")


@main.command()
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--d", type=FRACTION, default=None, help="Search the largest size at dependence <= d.")
@click.option("--s", type=int, default=None, help="Search the smallest dependence at size s.")
@click.option("--budget", type=int, default=DEFAULT_SEARCH_BUDGET, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Append the result row to this table file.")
@click.option("--workers", type=int, default=None)
@_exit_codes
def search(q, r, k, d, s, budget, out, workers):
    """Exhaustively compute one extremal value and emit its table row."""
    if (d is None) == (s is None):
        raise ValueError("exactly one of --d and --s is required")
    nworkers = _resolve_workers(workers)
    if d is not None:
        result = search_ind(q, r, k, d, budget=budget, workers=nworkers)
        row = TableRow(
            "maxsize", q, r, k, d, None, Fraction(result.value),
            result.witness.column_codes(), "brute-force",
        )
    else:
        result = search_min_dependence(q, r, k, s, budget=budget, workers=nworkers)
        row = TableRow(
            "mindep", q, r, k, None, s, result.value,
            result.witness.column_codes(), "brute-force",
        )
    click.echo(row.to_line())
    if out:
        _append_rows(out, [row])


@main.command()
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--s", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--trials", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--p-grid", default="", help="Comma-separated list of p values, e.g. '1/2,1/4'.")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@click.option("--workers", type=int, default=None)
@_exit_codes
def sample(q, r, s, k, trials, seed, p_grid, fmt, workers):
    """Sample random matrices and report the empirical dependence distribution."""
    config = SampleConfig(q, r, s, k, trials, seed, _resolve_workers(workers))
    dist = estimate_distribution(config)
    grid = [Fraction(part) for part in p_grid.split(",") if part.strip()]
    report = check_markov(config, grid, distribution=dist) if grid else None
    if fmt == "text":
        _sample_text(dist, report)
    elif fmt == "csv":
        _sample_csv(dist)
    else:
        _sample_json(dist, report)


def _sample_text(dist, report):
    c = dist.config
    click.echo(f"q = {c.q}, r = {c.r}, s = {c.s}, k = {c.k}")
    click.echo(f"trials = {c.trials}")
    click.echo(f"seed = {c.seed}")
    click.echo(f"subsets per sample = {dist.subsets}")
    click.echo(f"mean = {_both(dist.mean())}")
    for alpha in _QUANTILES:
        click.echo(f"quantile({_frac(alpha)}) = {_both(dist.quantile(alpha))}")
    click.echo("histogram (dependent subsets x samples):")
    for dep, mult in dist.counts:
        click.echo(f"  {dep}/{dist.subsets} x {mult}")
    if report is not None:
        click.echo("markov checks:")
        for row in report.rows:
            tag = " (vacuous)" if row.vacuous else ""
            verdict = "ok" if row.ok else "FAIL"
            click.echo(
                f"  p = {_frac(row.p)}: bound = {_both(row.bound)}{tag}, "
                f"tail = {_both(row.tail)}, quantile = {_frac(row.quantile)}, "
                f"allowed = {_dec(row.allowed)}, {verdict}"
            )


def _sample_csv(dist):
    click.echo("dependent,subsets,samples")
    for dep, mult in dist.counts:
        click.echo(f"{dep},{dist.subsets},{mult}")


def _sample_json(dist, report):
    c = dist.config
    payload = {
        "q": c.q,
        "r": c.r,
        "s": c.s,
        "k": c.k,
        "trials": c.trials,
        "seed": c.seed,
        "subsets": dist.subsets,
        "mean": {"fraction": _frac(dist.mean()), "decimal": float(dist.mean())},
        "quantiles": {_frac(a): _frac(dist.quantile(a)) for a in _QUANTILES},
        "histogram": [[dep, mult] for dep, mult in dist.counts],
    }
    if report is not None:
        payload["markov"] = [
            {
                "p": _frac(row.p),
                "bound": _frac(row.bound),
                "decimal": float(row.bound),
                "vacuous": row.vacuous,
                "tail": _frac(row.tail),
                "allowed": row.allowed,
                "ok": row.ok,
            }
            for row in report.rows
        ]
    click.echo(json.dumps(payload, indent=2))


@main.command()
@click.option("--q", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--n", type=int, required=True, help="Copies of each projective point.")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--budget", type=int, default=DEFAULT_CONSTRUCT_COLUMNS, show_default=True)
@click.option("--workers", type=int, default=None)
@_exit_codes
def construct(q, r, n, out, budget, workers):
    """Write the n-fold projective point multiset as a matrix document."""
    matrix = projective_multiset(q, r, n, column_limit=budget)
    doc = MatroidDocument.for_matrix(matrix, name=f"projective-multiset-q{q}-r{r}-n{n}")
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(doc.to_text())
    prof = dependence_profile(from_matrix(matrix), workers=_resolve_workers(workers))
    click.echo(f"wrote {out}")
    click.echo(f"s = {matrix.ncols}")
    for k, (dep, total) in enumerate(prof.counts):
        click.echo(f"d(M,{k}) = {dep}/{total} = {_dec(Fraction(dep, total))}")


def _append_rows(path, rows):
    fresh = not os.path.exists(path)
    with open(path, "a", encoding="utf-8", newline="\n") as fh:
        if fresh:
            fh.write(TABLE_HEADER + "\n")
        for row in rows:
            fh.write(row.to_line() + "\n")


if __name__ == "__main__":
    main()
