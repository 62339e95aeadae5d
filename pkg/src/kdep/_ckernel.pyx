# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of kdep._pykernel; same contract, same results.

Hard limits of the scratch buffers: nrows <= 64, ncols <= 256, m <= 64.
Callers in this package stay far below them and the Python entry points
check before dropping into the C loops.
"""


def rank(const unsigned char[::1] data, int nrows, const unsigned char[::1] sel,
         int q, const unsigned char[::1] add, const unsigned char[::1] mul,
         const unsigned char[::1] neg, const unsigned char[::1] inv):
    cdef int nsel = <int> sel.shape[0]
    cdef int i, t, j, base, pr, pi, f, mbase, b
    cdef int npiv = 0
    cdef unsigned long long w
    cdef unsigned long long pivword[64]
    cdef int pivbit[64]
    cdef unsigned char v[64]
    cdef unsigned char pivvec[64][64]
    cdef int pivrow[64]

    if nrows > 64:
        raise ValueError("kernel supports at most 64 rows")
    if q == 2:
        for t in range(nsel):
            j = sel[t]
            base = j * nrows
            w = 0
            for i in range(nrows):
                if data[base + i]:
                    w |= (<unsigned long long> 1) << i
            for i in range(npiv):
                if (w >> pivbit[i]) & 1:
                    w ^= pivword[i]
            if w:
                b = 0
                while not ((w >> b) & 1):
                    b += 1
                pivbit[npiv] = b
                pivword[npiv] = w
                npiv += 1
        return npiv
    for t in range(nsel):
        j = sel[t]
        base = j * nrows
        for i in range(nrows):
            v[i] = data[base + i]
        for pi in range(npiv):
            f = v[pivrow[pi]]
            if f:
                mbase = f * q
                for i in range(nrows):
                    v[i] = add[v[i] * q + neg[mul[mbase + pivvec[pi][i]]]]
        pr = -1
        for i in range(nrows):
            if v[i]:
                pr = i
                break
        if pr >= 0:
            if v[pr] != 1:
                mbase = inv[v[pr]] * q
                for i in range(nrows):
                    v[i] = mul[mbase + v[i]]
            pivrow[npiv] = pr
            for i in range(nrows):
                pivvec[npiv][i] = v[i]
            npiv += 1
    return npiv


def count_dependent(const unsigned char[::1] data, int nrows, int ncols, int m, int q,
                    const unsigned char[::1] add, const unsigned char[::1] mul,
                    const unsigned char[::1] neg, const unsigned char[::1] inv,
                    const unsigned char[::1] first, long long count, long long limit):
    cdef int c[64]
    cdef unsigned long long words[256]
    cdef unsigned long long pivword[64]
    cdef int pivbit[64]
    cdef unsigned char v[64]
    cdef unsigned char pivvec[64][64]
    cdef int pivrow[64]
    cdef long long dep = 0
    cdef long long it
    cdef int i, j, t, base, pr, pi, f, mbase, b, idx, npiv
    cdef unsigned long long w
    cdef bint dependent

    if count <= 0 or m == 0:
        return 0
    if nrows > 64 or m > 64 or ncols > 256:
        raise ValueError("kernel limits exceeded (nrows <= 64, m <= 64, ncols <= 256)")
    for i in range(m):
        c[i] = first[i]

    if q == 2:
        for j in range(ncols):
            base = j * nrows
            words[j] = 0
            for i in range(nrows):
                if data[base + i]:
                    words[j] |= (<unsigned long long> 1) << i
        for it in range(count):
            npiv = 0
            dependent = False
            for t in range(m):
                w = words[c[t]]
                for i in range(npiv):
                    if (w >> pivbit[i]) & 1:
                        w ^= pivword[i]
                if w == 0:
                    dependent = True
                    break
                b = 0
                while not ((w >> b) & 1):
                    b += 1
                pivbit[npiv] = b
                pivword[npiv] = w
                npiv += 1
            if dependent:
                dep += 1
                if 0 < limit <= dep:
                    return dep
            if it + 1 < count:
                for j in range(m):
                    if j + 1 == m or c[j] + 1 < c[j + 1]:
                        c[j] += 1
                        for i in range(j):
                            c[i] = i
                        break
        return dep

    for it in range(count):
        npiv = 0
        dependent = False
        for t in range(m):
            idx = c[t]
            base = idx * nrows
            for i in range(nrows):
                v[i] = data[base + i]
            for pi in range(npiv):
                f = v[pivrow[pi]]
                if f:
                    mbase = f * q
                    for i in range(nrows):
                        v[i] = add[v[i] * q + neg[mul[mbase + pivvec[pi][i]]]]
            pr = -1
            for i in range(nrows):
                if v[i]:
                    pr = i
                    break
            if pr < 0:
                dependent = True
                break
            if v[pr] != 1:
                mbase = inv[v[pr]] * q
                for i in range(nrows):
                    v[i] = mul[mbase + v[i]]
            pivrow[npiv] = pr
            for i in range(nrows):
                pivvec[npiv][i] = v[i]
            npiv += 1
        if dependent:
            dep += 1
            if 0 < limit <= dep:
                return dep
        if it + 1 < count:
            for j in range(m):
                if j + 1 == m or c[j] + 1 < c[j + 1]:
                    c[j] += 1
                    for i in range(j):
                        c[i] = i
                    break
    return dep
