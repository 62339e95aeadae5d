"""Pure-Python rank kernels; reference for the compiled twin in _ckernel.pyx.

A matrix travels as column-major bytes: column j occupies
data[j*nrows : (j+1)*nrows], one field element per byte. Field tables are the
flat bytes from kdep.field. Both backends expose the same two functions and
must stay byte-for-byte interchangeable; tests compare them directly.

Rank is Gaussian elimination with leftmost-lowest pivoting. For q = 2 the
columns are packed into machine words (bit i = row i) and elimination is XOR
against a pivot list keyed by lowest set bit, which is what makes the binary
subset counts cheap.
"""

from __future__ import annotations


def _pack2(data, nrows, j):
    w = 0
    base = j * nrows
    for i in range(nrows):
        if data[base + i]:
            w |= 1 << i
    return w


def _rank2_words(words) -> int:
    pivots = []
    for w in words:
        for pb, pw in pivots:
            if (w >> pb) & 1:
                w ^= pw
        if w:
            pivots.append(((w & -w).bit_length() - 1, w))
    return len(pivots)


def _rank_general(columns, nrows, q, add, mul, neg, inv) -> int:
    # columns: iterable of per-column int lists; pivots normalised to lead 1
    # so elimination can use the raw entry as its factor.
    pivots = []
    for col in columns:
        v = list(col)
        for pr, pv in pivots:
            f = v[pr]
            if f:
                mrow = f * q
                for i in range(nrows):
                    v[i] = add[v[i] * q + neg[mul[mrow + pv[i]]]]
        pr = -1
        for i in range(nrows):
            if v[i]:
                pr = i
                break
        if pr >= 0:
            if v[pr] != 1:
                srow = inv[v[pr]] * q
                v = [mul[srow + x] for x in v]
            pivots.append((pr, v))
    return len(pivots)


def rank(data, nrows, sel, q, add, mul, neg, inv):
    """Rank of the columns listed in `sel` (bytes of column indices)."""
    if q == 2:
        return _rank2_words([_pack2(data, nrows, j) for j in sel])
    cols = [data[j * nrows : (j + 1) * nrows] for j in sel]
    return _rank_general(cols, nrows, q, add, mul, neg, inv)


def count_dependent(data, nrows, ncols, m, q, add, mul, neg, inv, first, count, limit):
    """Count dependent m-subsets among `count` colex-consecutive subsets.

    Iteration starts at the sorted subset `first` and advances by colex
    successor. A subset is dependent when its rank is below m. When
    limit > 0 the count short-circuits at limit.
    """
    if count <= 0 or m == 0:
        return 0
    c = list(first)
    dep = 0
    if q == 2:
        words = [_pack2(data, nrows, j) for j in range(ncols)]
        for it in range(count):
            rk = 0
            pivots = []
            for idx in c:
                w = words[idx]
                for pb, pw in pivots:
                    if (w >> pb) & 1:
                        w ^= pw
                if w == 0:
                    break
                pivots.append((((w & -w).bit_length() - 1), w))
                rk += 1
            if rk < m:
                dep += 1
                if 0 < limit <= dep:
                    return dep
            if it + 1 < count:
                _advance(c)
        return dep
    cols = [data[j * nrows : (j + 1) * nrows] for j in range(ncols)]
    for it in range(count):
        rk = 0
        pivots = []
        dependent = False
        for idx in c:
            v = list(cols[idx])
            for pr, pv in pivots:
                f = v[pr]
                if f:
                    mrow = f * q
                    for i in range(nrows):
                        v[i] = add[v[i] * q + neg[mul[mrow + pv[i]]]]
            pr = -1
            for i in range(nrows):
                if v[i]:
                    pr = i
                    break
            if pr < 0:
                dependent = True
                break
            if v[pr] != 1:
                srow = inv[v[pr]] * q
                v = [mul[srow + x] for x in v]
            pivots.append((pr, v))
            rk += 1
        if dependent:
            dep += 1
            if 0 < limit <= dep:
                return dep
        if it + 1 < count:
            _advance(c)
    return dep


def _advance(c):
    # colex successor in place
    m = len(c)
    for j in range(m):
        if j + 1 == m or c[j] + 1 < c[j + 1]:
            c[j] += 1
            for i in range(j):
                c[i] = i
            return
