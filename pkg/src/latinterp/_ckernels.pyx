# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``latinterp._pykernels``.

Masks are held as ``uint64``; callers route wider lattices to the Python
fallback.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from latinterp.errors import CapExceeded

cdef uint64_t ALL = <uint64_t>(-1)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef uint64_t _eval(const uint64_t* c, const uint64_t* x, int n, uint64_t* prefix) noexcept nogil:
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t s, low
    cdef uint64_t acc = c[0]
    cdef uint64_t m
    prefix[0] = ALL
    for s in range(1, size):
        low = s & -s
        m = prefix[s ^ low] & x[_ctz(<uint64_t>low)]
        prefix[s] = m
        acc |= c[s] & m
    return acc


cdef uint64_t* _load(values, Py_ssize_t count) except NULL:
    cdef uint64_t* buf = <uint64_t*>malloc((count if count > 0 else 1) * sizeof(uint64_t))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(count):
            buf[i] = values[i]
    except BaseException:
        free(buf)
        raise
    return buf


def eval_dnf(coeffs, point):
    cdef int n = len(point)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t* c = _load(coeffs, size)
    cdef uint64_t* x = NULL
    cdef uint64_t* prefix = NULL
    cdef uint64_t r
    try:
        x = _load(point, n)
        prefix = <uint64_t*>malloc(size * sizeof(uint64_t))
        if prefix == NULL:
            raise MemoryError()
        r = _eval(c, x, n, prefix)
    finally:
        free(c)
        free(x)
        free(prefix)
    return r


def eval_many(coeffs, points):
    if not points:
        return []
    cdef int n = len(points[0])
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t* c = _load(coeffs, size)
    cdef uint64_t* x = NULL
    cdef uint64_t* prefix = NULL
    out = []
    try:
        prefix = <uint64_t*>malloc(size * sizeof(uint64_t))
        if prefix == NULL:
            raise MemoryError()
        for p in points:
            x = _load(p, n)
            out.append(_eval(c, x, n, prefix))
            free(x)
            x = NULL
    finally:
        free(c)
        free(x)
        free(prefix)
    return out


def value_table(coeffs, int n, carrier):
    """Values at every point of ``carrier**n``, first coordinate slowest."""
    cdef Py_ssize_t m = len(carrier)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t t, i, k, rem
    cdef int j
    for j in range(n):
        total *= m
    cdef uint64_t* c = _load(coeffs, size)
    cdef uint64_t* elems = NULL
    cdef uint64_t* x = NULL
    cdef uint64_t* prefix = NULL
    try:
        elems = _load(carrier, m)
        x = <uint64_t*>malloc((n if n > 0 else 1) * sizeof(uint64_t))
        prefix = <uint64_t*>malloc(size * sizeof(uint64_t))
        if x == NULL or prefix == NULL:
            raise MemoryError()
        out = [0] * total
        for t in range(total):
            rem = t
            for j in range(n - 1, -1, -1):
                k = rem % m
                rem = rem // m
                x[j] = elems[k]
            out[t] = _eval(c, x, n, prefix)
    finally:
        free(c)
        free(elems)
        free(x)
        free(prefix)
    return out


def tighten(int n, lo, hi):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t s
    cdef int k
    cdef Py_ssize_t bit
    lo = list(lo)
    hi = list(hi)
    for k in range(n):
        bit = (<Py_ssize_t>1) << k
        for s in range(size):
            if s & bit:
                lo[s] |= lo[s ^ bit]
        for s in range(size - 1, -1, -1):
            if not s & bit:
                hi[s] &= hi[s | bit]
    return lo, hi


def enumerate_monotone(int n, elements, lo, hi, cap):
    """Bounded monotone coefficient tables in canonical order."""
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    lo, hi = tighten(n, lo, hi)
    elements = sorted(elements)
    cdef Py_ssize_t m = len(elements)
    cdef uint64_t* elems = _load(elements, m)
    cdef uint64_t* los = NULL
    cdef uint64_t* his = NULL
    cdef uint64_t* cands = NULL
    cdef Py_ssize_t* start = NULL
    cdef Py_ssize_t* stop = NULL
    cdef Py_ssize_t* pos = NULL
    cdef uint64_t* chosen = NULL
    cdef uint64_t* upper = NULL
    cdef Py_ssize_t s, i, e, fill, level, limit
    cdef int k
    cdef uint64_t bound
    cdef bint fresh
    out = []
    limit = cap
    try:
        los = _load(lo, size)
        his = _load(hi, size)
        cands = <uint64_t*>malloc(size * (m if m > 0 else 1) * sizeof(uint64_t))
        start = <Py_ssize_t*>malloc(size * sizeof(Py_ssize_t))
        stop = <Py_ssize_t*>malloc(size * sizeof(Py_ssize_t))
        pos = <Py_ssize_t*>malloc(size * sizeof(Py_ssize_t))
        chosen = <uint64_t*>malloc(size * sizeof(uint64_t))
        upper = <uint64_t*>malloc(size * sizeof(uint64_t))
        if not (cands and start and stop and pos and chosen and upper):
            raise MemoryError()
        fill = 0
        for s in range(size):
            start[s] = fill
            for e in range(m):
                if not (los[s] & ~elems[e]) and not (elems[e] & ~his[s]):
                    cands[fill] = elems[e]
                    fill += 1
            stop[s] = fill
            if stop[s] == start[s]:
                return out
            chosen[s] = 0
        level = size - 1
        fresh = True
        while level < size:
            if level < 0:
                out.append(tuple([chosen[s] for s in range(size)]))
                if len(out) > limit:
                    raise CapExceeded(f"more than {cap} monotone tables", len(out), cap)
                level = 0
                fresh = False
                continue
            if fresh:
                bound = ALL
                for k in range(n):
                    if not (level >> k) & 1:
                        bound &= chosen[level | ((<Py_ssize_t>1) << k)]
                upper[level] = bound
                pos[level] = start[level]
            bound = upper[level]
            i = pos[level]
            while i < stop[level] and (cands[i] & ~bound):
                i += 1
            if i < stop[level]:
                chosen[level] = cands[i]
                pos[level] = i + 1
                level -= 1
                fresh = True
            else:
                level += 1
                fresh = False
    finally:
        free(elems)
        free(los)
        free(his)
        free(cands)
        free(start)
        free(stop)
        free(pos)
        free(chosen)
        free(upper)
    return out
