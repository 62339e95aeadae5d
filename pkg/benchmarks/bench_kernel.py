"""Compare the compiled kernel against the pure-Python fallback.

Run from the repository root after an editable install:

    python benchmarks/bench_kernel.py

Both backends run the same workloads: rank over random column selections and
full dependent-subset counts, across a few (q, r, s, m) shapes. Results are
checked for agreement before timing, so a speedup line is also a parity line.
"""

from __future__ import annotations

import math
import time

from kdep import _pykernel, sample_codes
from kdep.field import make_field
from kdep.linalg import decode_vector

try:
    from kdep import _ckernel
except ImportError:
    _ckernel = None

SHAPES = [
    # q, r, s, m, matrices
    (2, 4, 12, 4, 400),
    (2, 6, 14, 5, 120),
    (3, 3, 10, 3, 300),
    (4, 3, 9, 3, 200),
    (9, 2, 8, 2, 300),
]


def _matrices(q, r, s, count, seed=20240917):
    field = make_field(q)
    out = []
    for index in range(count):
        codes = sample_codes(q, r, s, seed, index)
        out.append(bytes(x for c in codes for x in decode_vector(q, r, c)))
    return field, out


def _run(backend, field, mats, r, s, m):
    q = field.q
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    sel = bytes(range(s))
    first = bytes(range(m))
    total = math.comb(s, m)
    acc = 0
    start = time.perf_counter()
    for data in mats:
        acc += backend.rank(data, r, sel, q, add, mul, neg, inv)
        acc += backend.count_dependent(data, r, s, m, q, add, mul, neg, inv, first, total, 0)
    return time.perf_counter() - start, acc


def main():
    if _ckernel is None:
        print("compiled kernel unavailable; only the pure backend was timed")
    print(f"{'shape':>22} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for q, r, s, m, count in SHAPES:
        field, mats = _matrices(q, r, s, count)
        pure_t, pure_acc = _run(_pykernel, field, mats, r, s, m)
        if _ckernel is None:
            print(f"q={q} r={r} s={s} m={m:>2} {pure_t:>9.3f}s {'-':>10} {'-':>8}")
            continue
        comp_t, comp_acc = _run(_ckernel, field, mats, r, s, m)
        if pure_acc != comp_acc:
            raise SystemExit(f"backend mismatch on q={q} r={r} s={s} m={m}: {pure_acc} != {comp_acc}")
        print(
            f"q={q} r={r} s={s} m={m:>2} {pure_t:>9.3f}s {comp_t:>9.3f}s {pure_t / comp_t:>7.1f}x"
        )


if __name__ == "__main__":
    main()
