# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pykernels``.

Same signatures, same results.  ``elementary_divisors`` works on 64-bit
integers and raises ``OverflowError`` as soon as an intermediate entry would
leave that range; the caller then retries with the arbitrary-precision
Python kernel.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int bh_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int bh_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int bh_mul_ovf(long long a, long long b, long long *r) nogil
    int bh_sub_ovf(long long a, long long b, long long *r) nogil

DEF MAXN = 64

BACKEND = "cython"


def multiply(tuple u, tuple v):
    cdef Py_ssize_t n = len(v), i
    cdef long x
    out = [0] * n
    for i in range(n):
        x = v[i]
        if x > 0:
            out[i] = u[x - 1]
        else:
            out[i] = -u[-x - 1]
    return tuple(out)


def inverse(tuple w):
    cdef Py_ssize_t n = len(w), i
    cdef long x
    out = [0] * n
    for i in range(n):
        x = w[i]
        if x > 0:
            out[x - 1] = i + 1
        else:
            out[-x - 1] = -(i + 1)
    return tuple(out)


cdef inline int _key(int x, int n) nogil:
    return x if x > 0 else 2 * n + 1 + x


cdef inline int _iabs(int x) nogil:
    return x if x >= 0 else -x


cdef int _length(int *w, int n, bint type_b) nogil:
    cdef int i, j, total = 0, a, b
    if type_b:
        for i in range(n):
            if w[i] < 0:
                total += 1
            for j in range(i + 1, n):
                if _key(w[i], n) > _key(w[j], n):
                    total += 1
                a = w[i]
                b = w[j]
                if (a if _iabs(a) < _iabs(b) else b) < 0:
                    total += 1
    else:
        for i in range(n):
            for j in range(i + 1, n):
                if w[i] > w[j]:
                    total += 1
    return total


cdef unsigned long long _rdes(int *w, int n, bint type_b) nogil:
    cdef unsigned long long mask = 0
    cdef int i
    if type_b:
        for i in range(n - 1):
            if _key(w[i], n) > _key(w[i + 1], n):
                mask |= (<unsigned long long>1) << i
        if w[n - 1] < 0:
            mask |= (<unsigned long long>1) << (n - 1)
    else:
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                mask |= (<unsigned long long>1) << i
    return mask


cdef unsigned long long _ldes(int *w, int n, bint type_b) nogil:
    cdef int inv[MAXN]
    cdef int i, x
    for i in range(n):
        x = w[i]
        if x > 0:
            inv[x - 1] = i + 1
        else:
            inv[-x - 1] = -(i + 1)
    return _rdes(inv, n, type_b)


cdef int _load(tuple t, int *buf) except -1:
    cdef Py_ssize_t n = len(t), i
    if n > MAXN:
        raise ValueError("rank too large for compiled kernel")
    for i in range(n):
        buf[i] = t[i]
    return <int>n


cdef tuple _store(int *buf, int n):
    return tuple([buf[i] for i in range(n)])


def length(tuple w, bint type_b):
    cdef int buf[MAXN]
    cdef int n = _load(w, buf)
    return _length(buf, n, type_b)


def right_descent_mask(tuple w, bint type_b):
    cdef int buf[MAXN]
    cdef int n = _load(w, buf)
    return _rdes(buf, n, type_b)


def left_descent_mask(tuple w, bint type_b):
    cdef int buf[MAXN]
    cdef int n = _load(w, buf)
    return _ldes(buf, n, type_b)


def left_weight(tuple a, tuple b, bint type_b):
    cdef int wa[MAXN]
    cdef int wb[MAXN]
    cdef int n = _load(a, wa)
    _load(b, wb)
    cdef unsigned long long free_mask
    cdef int i, k, x, ax, tmp
    while True:
        free_mask = _ldes(wb, n, type_b) & ~_rdes(wa, n, type_b)
        if free_mask == 0:
            break
        i = 1
        while not (free_mask & 1):
            free_mask >>= 1
            i += 1
        if type_b and i == n:
            wa[n - 1] = -wa[n - 1]
            for k in range(n):
                if wb[k] == n or wb[k] == -n:
                    wb[k] = -wb[k]
                    break
        else:
            tmp = wa[i - 1]
            wa[i - 1] = wa[i]
            wa[i] = tmp
            for k in range(n):
                x = wb[k]
                ax = _iabs(x)
                if ax == i:
                    wb[k] = i + 1 if x > 0 else -(i + 1)
                elif ax == i + 1:
                    wb[k] = i if x > 0 else -i
    return _store(wa, n), _store(wb, n)


cdef inline long long _llabs(long long x) nogil:
    return x if x >= 0 else -x


cdef inline long long _floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


def elementary_divisors(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return []
    cdef long long *a = <long long *>malloc(nrows * ncols * sizeof(long long))
    cdef char *alive = <char *>malloc(nrows)
    if a == NULL or alive == NULL:
        free(a)
        free(alive)
        raise MemoryError()
    cdef Py_ssize_t r, c, pr, pc, k
    cdef long long v, p, q, best, y, t, av
    cdef bint found, smaller
    cdef list pivots = []
    try:
        for r in range(nrows):
            row = rows[r]
            alive[r] = 0
            for c in range(ncols):
                a[r * ncols + c] = row[c]
                if a[r * ncols + c] != 0:
                    alive[r] = 1
        while True:
            found = False
            best = 0
            pr = -1
            pc = -1
            for r in range(nrows):
                if not alive[r]:
                    continue
                for c in range(ncols):
                    v = a[r * ncols + c]
                    if v != 0:
                        av = _llabs(v)
                        if not found or av < best:
                            best = av
                            pr = r
                            pc = c
                            found = True
                if found and best == 1:
                    break
            if not found:
                break
            while True:
                p = a[pr * ncols + pc]
                smaller = False
                best = 0
                k = -1
                for r in range(nrows):
                    if r == pr or not alive[r]:
                        continue
                    v = a[r * ncols + pc]
                    if v == 0:
                        continue
                    q = _floordiv(v, p)
                    alive[r] = 0
                    for c in range(ncols):
                        t = a[pr * ncols + c]
                        if t != 0:
                            if bh_mul_ovf(q, t, &y) or bh_sub_ovf(a[r * ncols + c], y, &y):
                                raise OverflowError("int64 overflow in elimination")
                            a[r * ncols + c] = y
                        if a[r * ncols + c] != 0:
                            alive[r] = 1
                    if not alive[r]:
                        continue
                    v = a[r * ncols + pc]
                    if v != 0 and (not smaller or _llabs(v) < best):
                        smaller = True
                        best = _llabs(v)
                        k = r
                if smaller:
                    pr = k
                    continue
                smaller = False
                best = 0
                k = -1
                for c in range(ncols):
                    if c == pc:
                        continue
                    v = a[pr * ncols + c]
                    if v == 0:
                        continue
                    v = v - _floordiv(v, p) * p
                    a[pr * ncols + c] = v
                    if v != 0 and (not smaller or _llabs(v) < best):
                        smaller = True
                        best = _llabs(v)
                        k = c
                if smaller:
                    pc = k
                    continue
                pivots.append(_llabs(p))
                a[pr * ncols + pc] = 0
                alive[pr] = 0
                break
    finally:
        free(a)
        free(alive)
    return pivots
