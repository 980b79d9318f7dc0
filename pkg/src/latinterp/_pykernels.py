"""Pure-Python kernels; the fallback when the compiled module is unavailable.

Lattice and Boolean-algebra elements are bitmasks.  A coefficient table has
``2**n`` entries, entry ``I`` belonging to the subset whose bit ``i`` means
variable ``i`` is present.
"""

from latinterp.errors import CapExceeded

_ALL = -1


def eval_dnf(coeffs, point):
    """Join over ``I`` of ``coeffs[I] & (meet of point[i], i in I)``."""
    n = len(point)
    size = 1 << n
    acc = coeffs[0]
    prefix = [_ALL] * size
    for subset in range(1, size):
        low = subset & -subset
        m = prefix[subset ^ low] & point[low.bit_length() - 1]
        prefix[subset] = m
        acc |= coeffs[subset] & m
    return acc


def eval_many(coeffs, points):
    return [eval_dnf(coeffs, p) for p in points]


def value_table(coeffs, n, carrier):
    """Values at every point of ``carrier**n``, first coordinate slowest.

    Substitutes one variable at a time: fixing ``x_0 = v`` turns the table
    into ``c'[I] = c[2I] | (c[2I+1] & v)`` over the remaining variables.
    """
    tables = [list(coeffs)]
    for _ in range(n):
        nxt = []
        for c in tables:
            half = len(c) >> 1
            evens = c[0::2]
            odds = c[1::2]
            for v in carrier:
                nxt.append([evens[i] | (odds[i] & v) for i in range(half)])
        tables = nxt
    return [c[0] for c in tables]


def tighten(n, lo, hi):
    """Propagate bounds so that monotone tables inside them never dead-end."""
    size = 1 << n
    lo = list(lo)
    hi = list(hi)
    for k in range(n):
        bit = 1 << k
        for subset in range(size):
            if subset & bit:
                lo[subset] |= lo[subset ^ bit]
        for subset in range(size - 1, -1, -1):
            if not subset & bit:
                hi[subset] &= hi[subset | bit]
    return lo, hi


def enumerate_monotone(n, elements, lo, hi, cap):
    """All tables ``c`` with ``c[I]`` in ``elements``, ``lo[I] <= c[I] <= hi[I]``
    and ``c[I] <= c[J]`` whenever ``I`` is a subset of ``J``.

    Tables come out in lexicographic order of ``(c[2**n - 1], ..., c[0])``
    with ``elements`` taken in increasing integer order.  Raises
    ``CapExceeded`` once more than ``cap`` tables are found.
    """
    size = 1 << n
    lo, hi = tighten(n, lo, hi)
    elements = sorted(elements)
    cands = [[e for e in elements if not lo[s] & ~e and not e & ~hi[s]] for s in range(size)]
    if any(not c for c in cands):
        return []
    chosen = [0] * size
    pos = [0] * size
    upper = [0] * size
    out = []
    level = size - 1
    fresh = True
    while level < size:
        if level < 0:
            out.append(tuple(chosen))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} monotone tables", len(out), cap)
            level = 0
            fresh = False
            continue
        if fresh:
            bound = _ALL
            for k in range(n):
                bit = 1 << k
                if not level & bit:
                    bound &= chosen[level | bit]
            upper[level] = bound
            pos[level] = 0
        bound = upper[level]
        options = cands[level]
        i = pos[level]
        while i < len(options) and options[i] & ~bound:
            i += 1
        if i < len(options):
            chosen[level] = options[i]
            pos[level] = i + 1
            level -= 1
            fresh = True
        else:
            level += 1
            fresh = False
    return out
