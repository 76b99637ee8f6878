# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled permutation kernels; semantics mirror braidkit._kernel_py exactly.

Inversion sets are kept as one 64-bit row mask per strand, so this backend
supports up to 64 strands; the pure-Python twin has no such limit.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

DEF MAXN = 64


cdef inline int _load(object p, int* buf) except -1:
    cdef Py_ssize_t n = len(p)
    cdef Py_ssize_t i
    cdef int v
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 strands")
    for i in range(n):
        v = p[i]
        if v < 0 or v >= n:
            raise ValueError("permutation entry out of range")
        buf[i] = v
    return <int> n


cdef inline int _load_pair(object a, object b, int* ba, int* bb) except -1:
    cdef int n = _load(a, ba)
    if _load(b, bb) != n:
        raise ValueError("mixed strand counts in kernel call")
    return n


cdef inline tuple _dump(const int* buf, int n):
    cdef list out = [0] * n
    cdef int i
    for i in range(n):
        out[i] = buf[i]
    return tuple(out)


cdef inline void _c_compose(const int* a, const int* b, int* out, int n) nogil:
    cdef int i
    for i in range(n):
        out[i] = b[a[i]]


cdef inline void _c_invert(const int* a, int* out, int n) nogil:
    cdef int i
    for i in range(n):
        out[a[i]] = i


cdef inline int _c_inv_count(const int* a, int n) nogil:
    cdef int i, j, total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                total += 1
    return total


cdef inline void _c_tau(const int* a, int* out, int n) nogil:
    cdef int i
    for i in range(n):
        out[i] = n - 1 - a[n - 1 - i]


cdef inline void _c_rc(const int* a, int* out, int n) nogil:
    cdef int ainv[MAXN]
    cdef int i
    _c_invert(a, ainv, n)
    for i in range(n):
        out[i] = n - 1 - ainv[i]


cdef inline void _c_lc(const int* a, int* out, int n) nogil:
    cdef int ainv[MAXN]
    cdef int i
    _c_invert(a, ainv, n)
    for i in range(n):
        out[i] = ainv[n - 1 - i]


cdef inline void _c_rows(const int* a, uint64_t* rows, int n) nogil:
    cdef int i, j
    cdef uint64_t m
    for i in range(n):
        m = 0
        for j in range(i + 1, n):
            if a[i] > a[j]:
                m |= (<uint64_t> 1) << j
        rows[i] = m


cdef inline void _c_close(uint64_t* rows, int n) nogil:
    cdef int i, j
    cdef uint64_t rj, bit
    for j in range(n - 2, 0, -1):
        rj = rows[j]
        if rj == 0:
            continue
        bit = (<uint64_t> 1) << j
        for i in range(j):
            if rows[i] & bit:
                rows[i] |= rj


cdef inline void _c_perm_from_rows(const uint64_t* rows, int* out, int n) nogil:
    cdef int i, j, v
    for i in range(n):
        v = __builtin_popcountll(rows[i])
        for j in range(i):
            if not (rows[j] >> i) & 1:
                v += 1
        out[i] = v


cdef inline void _c_join(const int* a, const int* b, int* out, int n) nogil:
    cdef uint64_t ra[MAXN]
    cdef uint64_t rb[MAXN]
    cdef int i
    _c_rows(a, ra, n)
    _c_rows(b, rb, n)
    for i in range(n):
        ra[i] |= rb[i]
    _c_close(ra, n)
    _c_perm_from_rows(ra, out, n)


cdef inline void _c_meet(const int* a, const int* b, int* out, int n) nogil:
    # meet via the complement duality: compose with the reversal on both
    # sides of a join (compose(delta, x)[i] = x[n-1-i])
    cdef int da[MAXN]
    cdef int db[MAXN]
    cdef int jn[MAXN]
    cdef int i
    for i in range(n):
        da[i] = a[n - 1 - i]
        db[i] = b[n - 1 - i]
    _c_join(da, db, jn, n)
    for i in range(n):
        out[i] = jn[n - 1 - i]


cdef inline bint _c_is_lw(const int* s, const int* t, int n) nogil:
    cdef int sinv[MAXN]
    cdef int i
    _c_invert(s, sinv, n)
    for i in range(n - 1):
        if t[i] > t[i + 1] and sinv[i] < sinv[i + 1]:
            return 0
    return 1


cdef inline bint _c_is_identity(const int* a, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] != i:
            return 0
    return 1


cdef inline bint _c_is_delta(const int* a, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] != n - 1 - i:
            return 0
    return 1


cdef void _c_gnome(int* arr, int m, int n) nogil:
    # left-weighting sweep with step-back, identical to the Python twin
    cdef int i = 0
    cdef int k
    cdef int move[MAXN]
    cdef int minv[MAXN]
    cdef int rc[MAXN]
    cdef int tmp[MAXN]
    while i < m - 1:
        if _c_is_lw(arr + i * n, arr + (i + 1) * n, n):
            i += 1
            continue
        _c_rc(arr + i * n, rc, n)
        _c_meet(rc, arr + (i + 1) * n, move, n)
        _c_compose(arr + i * n, move, tmp, n)
        for k in range(n):
            arr[i * n + k] = tmp[k]
        _c_invert(move, minv, n)
        _c_compose(minv, arr + (i + 1) * n, tmp, n)
        for k in range(n):
            arr[(i + 1) * n + k] = tmp[k]
        if i > 0:
            i -= 1


def identity(n):
    return tuple(range(n))


def delta(n):
    return tuple(range(n - 1, -1, -1))


def compose(a, b):
    cdef int ba[MAXN]
    cdef int bb[MAXN]
    cdef int out[MAXN]
    cdef int n = _load_pair(a, b, ba, bb)
    _c_compose(ba, bb, out, n)
    return _dump(out, n)


def invert(a):
    cdef int ba[MAXN]
    cdef int out[MAXN]
    cdef int n = _load(a, ba)
    _c_invert(ba, out, n)
    return _dump(out, n)


def inv_count(a):
    cdef int ba[MAXN]
    cdef int n = _load(a, ba)
    return _c_inv_count(ba, n)


def tau(a):
    cdef int ba[MAXN]
    cdef int out[MAXN]
    cdef int n = _load(a, ba)
    _c_tau(ba, out, n)
    return _dump(out, n)


def right_complement(a):
    cdef int ba[MAXN]
    cdef int out[MAXN]
    cdef int n = _load(a, ba)
    _c_rc(ba, out, n)
    return _dump(out, n)


def left_complement(a):
    cdef int ba[MAXN]
    cdef int out[MAXN]
    cdef int n = _load(a, ba)
    _c_lc(ba, out, n)
    return _dump(out, n)


def join(a, b):
    cdef int ba[MAXN]
    cdef int bb[MAXN]
    cdef int out[MAXN]
    cdef int n = _load_pair(a, b, ba, bb)
    _c_join(ba, bb, out, n)
    return _dump(out, n)


def meet(a, b):
    cdef int ba[MAXN]
    cdef int bb[MAXN]
    cdef int out[MAXN]
    cdef int n = _load_pair(a, b, ba, bb)
    _c_meet(ba, bb, out, n)
    return _dump(out, n)


def is_prefix(a, b):
    cdef int ba[MAXN]
    cdef int bb[MAXN]
    cdef int ainv[MAXN]
    cdef int rest[MAXN]
    cdef int n = _load_pair(a, b, ba, bb)
    _c_invert(ba, ainv, n)
    _c_compose(ainv, bb, rest, n)
    return _c_inv_count(ba, n) + _c_inv_count(rest, n) == _c_inv_count(bb, n)


def is_left_weighted(s, t):
    cdef int bs[MAXN]
    cdef int bt[MAXN]
    cdef int n = _load_pair(s, t, bs, bt)
    return bool(_c_is_lw(bs, bt, n))


def normalize_factors(factors, n):
    """Left-greedy normalization; see the pure-Python twin for the contract."""
    cdef int cn = n
    cdef Py_ssize_t m = len(factors)
    cdef Py_ssize_t idx, lo, hi
    cdef int i, v
    cdef int* arr
    if cn > MAXN:
        raise ValueError("compiled kernel supports at most 64 strands")
    if m == 0:
        return 0, []
    arr = <int*> malloc(m * cn * sizeof(int))
    if arr == NULL:
        raise MemoryError()
    try:
        for idx in range(m):
            f = factors[idx]
            if len(f) != cn:
                raise ValueError("factor length does not match strand count")
            for i in range(cn):
                v = f[i]
                if v < 0 or v >= cn:
                    raise ValueError("permutation entry out of range")
                arr[idx * cn + i] = v

        _c_gnome(arr, <int> m, cn)

        lo = 0
        hi = m
        while lo < hi and _c_is_delta(arr + lo * cn, cn):
            lo += 1
        while lo < hi and _c_is_identity(arr + (hi - 1) * cn, cn):
            hi -= 1
        core = [_dump(arr + idx * cn, cn) for idx in range(lo, hi)]
        return <int> lo, core
    finally:
        free(arr)


def is_normal(factors, n):
    cdef int cn = n
    cdef int prev[MAXN]
    cdef int cur[MAXN]
    cdef int i, v
    cdef bint have_prev = 0
    if cn > MAXN:
        raise ValueError("compiled kernel supports at most 64 strands")
    seen = [0] * cn
    for f in factors:
        if len(f) != cn:
            return False
        for i in range(cn):
            seen[i] = 0
        for i in range(cn):
            v = f[i]
            if not 0 <= v < cn or seen[v]:
                return False
            seen[v] = 1
            cur[i] = v
        if _c_is_identity(cur, cn) or _c_is_delta(cur, cn):
            return False
        if have_prev and not _c_is_lw(prev, cur, cn):
            return False
        for i in range(cn):
            prev[i] = cur[i]
        have_prev = 1
    return True
