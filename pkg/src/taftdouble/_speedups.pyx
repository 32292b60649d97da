# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; pure-Python twins live in taftdouble.kernels."""


def poly_mulreduce(a, b, rows):
    """Convolve integer vectors a, b and fold degrees >= phi back with the
    precomputed reduction rows.  Values are arbitrary-precision Python ints;
    the win over the pure version is loop and indexing overhead."""
    cdef Py_ssize_t phi = len(a)
    cdef Py_ssize_t i, j, idx
    cdef list out = [0] * (2 * phi - 1)
    cdef object ai, bj, t, rj
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    cdef object row
    for idx in range(2 * phi - 2, phi - 1, -1):
        t = out[idx]
        if t:
            row = rows[idx - phi]
            for j in range(phi):
                rj = row[j]
                if rj:
                    out[j] = out[j] + t * rj
    del out[phi:]
    return out


def modp_rank(mat, p):
    """Rank over F_p of a C-contiguous int64 numpy matrix (in-place)."""
    cdef long long[:, ::1] a = mat
    cdef long long pp = p
    cdef Py_ssize_t nrows = a.shape[0]
    cdef Py_ssize_t ncols = a.shape[1]
    cdef Py_ssize_t rank = 0, col, r, j, pivot
    cdef long long v, inv, factor, tmp
    for r in range(nrows):
        for j in range(ncols):
            v = a[r, j] % pp
            if v < 0:
                v += pp
            a[r, j] = v
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = -1
        for r in range(rank, nrows):
            if a[r, col] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            for j in range(col, ncols):
                tmp = a[rank, j]
                a[rank, j] = a[pivot, j]
                a[pivot, j] = tmp
        inv = _inv_mod(a[rank, col], pp)
        for j in range(col, ncols):
            a[rank, j] = (a[rank, j] * inv) % pp
        for r in range(rank + 1, nrows):
            factor = a[r, col]
            if factor:
                for j in range(col, ncols):
                    a[r, j] = (a[r, j] - factor * a[rank, j]) % pp
                    if a[r, j] < 0:
                        a[r, j] += pp
        rank += 1
    return rank


cdef long long _inv_mod(long long a, long long p):
    cdef long long lm = 1, hm = 0
    cdef long long low = a % p, high = p
    cdef long long r, nm, nw
    while low > 1:
        r = high // low
        nm = hm - lm * r
        nw = high - low * r
        hm = lm
        high = low
        lm = nm
        low = nw
    return lm % p
