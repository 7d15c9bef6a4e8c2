# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pykernels``.

All arithmetic is on int64.  Callers must ensure inputs fit; the rank kernel
additionally detects overflow of intermediate minors and defers to the
Python implementation, so results are always exact.
"""

from libc.stdlib cimport malloc, calloc, free

from . import _pykernels

cdef extern from *:
    """
    static inline int cd_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int cd_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int cd_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int cd_mul_ovf(long long a, long long b, long long *r) nogil
    int cd_sub_ovf(long long a, long long b, long long *r) nogil
    int cd_ctz(unsigned long long x) nogil

NAME = "compiled"

cdef long long LIMIT = (<long long>1) << 62


def cut_weights(int n, w):
    cdef Py_ssize_t total = ((<Py_ssize_t>1) << (n - 1)) - 1
    cdef long long *adj = <long long *>calloc(n * n, sizeof(long long))
    cdef long long *deg = <long long *>calloc(n, sizeof(long long))
    cdef long long *inside = <long long *>calloc(n, sizeof(long long))
    cdef char *member = <char *>calloc(n, sizeof(char))
    cdef long long *out = <long long *>malloc(total * sizeof(long long))
    cdef int i, j, u, v
    cdef Py_ssize_t k = 0, step, gray
    cdef long long cut = 0, x
    if not adj or not deg or not inside or not member or not out:
        free(adj); free(deg); free(inside); free(member); free(out)
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(i + 1, n):
                x = w[k]
                adj[i * n + j] = x
                adj[j * n + i] = x
                deg[i] += x
                deg[j] += x
                k += 1
        with nogil:
            for step in range(1, total + 1):
                v = cd_ctz(<unsigned long long>step) + 1
                if member[v]:
                    member[v] = 0
                    for u in range(n):
                        inside[u] -= adj[v * n + u]
                    cut -= deg[v] - 2 * inside[v]
                else:
                    cut += deg[v] - 2 * inside[v]
                    member[v] = 1
                    for u in range(n):
                        inside[u] += adj[v * n + u]
                gray = step ^ (step >> 1)
                out[gray - 1] = cut
        return [out[k] for k in range(total)]
    finally:
        free(adj); free(deg); free(inside); free(member); free(out)


def crossing_matrix(int n, masks, cols):
    cdef Py_ssize_t nc = len(cols), c
    cdef int *left = <int *>malloc(max(nc, 1) * sizeof(int))
    cdef int *right = <int *>malloc(max(nc, 1) * sizeof(int))
    cdef int i, j
    cdef unsigned long long m
    if not left or not right:
        free(left); free(right)
        raise MemoryError()
    try:
        pairs = []
        for i in range(n):
            for j in range(i + 1, n):
                pairs.append((i, j))
        for c in range(nc):
            left[c], right[c] = pairs[cols[c]]
        rows = []
        for mask in masks:
            m = mask
            rows.append([((m >> left[c]) ^ (m >> right[c])) & 1 for c in range(nc)])
        return rows
    finally:
        free(left); free(right)


cdef int _bareiss(long long *a, int nrows, int ncols) nogil:
    """Rank of the row-major matrix ``a`` (destroyed); -1 on int64 overflow."""
    cdef long long prev = 1, p, f, t1, t2, d
    cdef int r = 0, c, i, j, best
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        for i in range(r, nrows):
            f = a[i * ncols + c]
            if f != 0:
                if best < 0 or (f if f > 0 else -f) < (a[best * ncols + c] if a[best * ncols + c] > 0 else -a[best * ncols + c]):
                    best = i
        if best < 0:
            continue
        if best != r:
            for j in range(ncols):
                t1 = a[r * ncols + j]
                a[r * ncols + j] = a[best * ncols + j]
                a[best * ncols + j] = t1
        p = a[r * ncols + c]
        for i in range(r + 1, nrows):
            f = a[i * ncols + c]
            for j in range(c + 1, ncols):
                if cd_mul_ovf(p, a[i * ncols + j], &t1):
                    return -1
                if cd_mul_ovf(f, a[r * ncols + j], &t2):
                    return -1
                if cd_sub_ovf(t1, t2, &d):
                    return -1
                a[i * ncols + j] = d / prev
            a[i * ncols + c] = 0
        prev = p
        r += 1
    return r


def rank_int(rows):
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef long long *a = <long long *>malloc(nrows * ncols * sizeof(long long))
    cdef int i, j, r
    if not a:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                x = row[j]
                if x >= LIMIT or x <= -LIMIT:
                    return _pykernels.rank_int(rows)
                a[i * ncols + j] = x
        with nogil:
            r = _bareiss(a, nrows, ncols)
        if r < 0:
            return _pykernels.rank_int(rows)
        return r
    finally:
        free(a)
