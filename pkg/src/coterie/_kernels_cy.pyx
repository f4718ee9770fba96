# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernels_py.

Coefficients stay Python objects (arbitrary-precision ints); only loop
indices and the small poset masks get C types. Keep the two modules in
lockstep: tests/test_kernels.py compares them on random inputs.
"""

from math import gcd

REL_GT = 0
REL_GE = 1
REL_EQ = 2


def idot(f, x):
    cdef Py_ssize_t i, n = len(f)
    s = 0
    for i in range(n):
        s += f[i] * x[i]
    return s


def rank_of(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t nrows, ncols, rank, col, r, j, piv
    mat = [list(r_) for r_ in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            mat[piv], mat[rank] = mat[rank], mat[piv]
        p = mat[rank][col]
        top = mat[rank]
        for r in range(rank + 1, nrows):
            row = mat[r]
            c = row[col]
            for j in range(ncols):
                row[j] = (p * row[j] - c * top[j]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


cdef _reduce_row(coeffs, bound):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, bound)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        bound = bound // g
    return coeffs, bound


def fm_step(rows, col):
    """One Fourier-Motzkin step eliminating variable `col`.

    Same contract as the pure version: inequality rows only; derived rows
    strict iff a parent is strict; same-functional rows merged.
    """
    cdef Py_ssize_t n
    keep = []
    pos = []
    neg = []
    for row in rows:
        c = row[0][col]
        if c == 0:
            keep.append(row)
        elif c > 0:
            pos.append(row)
        else:
            neg.append(row)
    merged = {}
    for coeffs, bound, strict in keep:
        old = merged.get(coeffs)
        if old is None:
            merged[coeffs] = (bound, strict)
        else:
            ob, os = old
            if bound > ob or (bound == ob and strict and not os):
                merged[coeffs] = (bound, strict if bound > ob else (strict or os))
    n = len(rows[0][0]) if rows else 0
    for f, b, s in pos:
        a = f[col]
        for g, c, t in neg:
            m = -g[col]
            coeffs = tuple([m * f[i] + a * g[i] for i in range(n)])
            coeffs, bound = _reduce_row(coeffs, m * b + a * c)
            strict = s or t
            old = merged.get(coeffs)
            if old is None:
                merged[coeffs] = (bound, strict)
            else:
                ob, os = old
                if bound > ob or (bound == ob and strict and not os):
                    merged[coeffs] = (bound, strict if bound > ob else (strict or os))
    return [(coeffs, bound, strict) for coeffs, (bound, strict) in merged.items()]


def eval_rows(rows, x):
    """True iff the integer point x satisfies every (coeffs, bound, rel) row."""
    cdef int rel
    for coeffs, bound, rel_ in rows:
        rel = rel_
        v = idot(coeffs, x)
        if rel == REL_GT:
            if not v > bound:
                return False
        elif rel == REL_GE:
            if not v >= bound:
                return False
        else:
            if v != bound:
                return False
    return True


def order_pairs_disagree(a, b):
    """First flattened pair index where the two mask-triple orders differ, else -1."""
    cdef Py_ssize_t i, j, size = len(a)
    cdef unsigned long long an, ar, al, bn, br, bl, gn, gr, gl, hn, hr, hl
    cdef bint ge_a, ge_b
    cdef list am = [], bm = []
    for i in range(size):
        am.append((<unsigned long long> a[i][0], <unsigned long long> a[i][1], <unsigned long long> a[i][2]))
        bm.append((<unsigned long long> b[i][0], <unsigned long long> b[i][1], <unsigned long long> b[i][2]))
    for i in range(size):
        an, ar, al = am[i]
        bn, br, bl = bm[i]
        for j in range(size):
            gn, gr, gl = am[j]
            hn, hr, hl = bm[j]
            ge_a = (gn & ~an) == 0 and (ar & ~gr) == 0 and (al & ~gl) == 0
            ge_b = (hn & ~bn) == 0 and (br & ~hr) == 0 and (bl & ~hl) == 0
            if ge_a != ge_b:
                return i * size + j
    return -1
