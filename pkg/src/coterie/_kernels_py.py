"""Integer work loops, pure Python edition.

Everything here operates on plain Python ints (arbitrary precision) so the
compiled twin in _kernels_cy.pyx can type only loop indices and keep exact
arithmetic. Higher-level code clears denominators before calling in.

Row encodings:
  inequality rows for fm_step: (coeffs tuple, bound, strict flag)
  evaluation rows:             (coeffs tuple, bound, rel code) with
                               rel code 0 = ">", 1 = ">=", 2 = "="
"""

from math import gcd

REL_GT = 0
REL_GE = 1
REL_EQ = 2


def idot(f, x):
    s = 0
    for a, b in zip(f, x):
        s += a * b
    return s


def rank_of(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
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
        for r in range(rank + 1, nrows):
            c = mat[r][col]
            row = mat[r]
            top = mat[rank]
            for j in range(ncols):
                row[j] = (p * row[j] - c * top[j]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _reduce_row(coeffs, bound):
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

    rows must contain only inequalities (callers pivot equalities out first).
    A derived row is strict iff at least one parent is strict. Rows with the
    same functional are merged to the strongest bound.
    """
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

    def add(coeffs, bound, strict):
        old = merged.get(coeffs)
        if old is None:
            merged[coeffs] = (bound, strict)
        else:
            ob, os = old
            if bound > ob or (bound == ob and strict and not os):
                merged[coeffs] = (bound, strict if bound > ob else (strict or os))

    for coeffs, bound, strict in keep:
        add(coeffs, bound, strict)
    for f, b, s in pos:
        a = f[col]
        for g, c, t in neg:
            m = -g[col]
            coeffs = tuple(m * fi + a * gi for fi, gi in zip(f, g))
            coeffs, bound = _reduce_row(coeffs, m * b + a * c)
            add(coeffs, bound, s or t)
    return [(coeffs, bound, strict) for coeffs, (bound, strict) in merged.items()]


def eval_rows(rows, x):
    """True iff the integer point x satisfies every (coeffs, bound, rel) row."""
    for coeffs, bound, rel in rows:
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
    """Compare two partial orders given as mask triples on the same index set.

    a[i] = (n_i, r_i, l_i) and b[i] likewise, each mask a small nonneg int.
    i >= j holds iff (n_j & ~n_i) == 0 and (r_i & ~r_j) == 0 and
    (l_i & ~l_j) == 0. Returns the first flattened pair index where the two
    orders disagree, or -1 when they agree everywhere.
    """
    size = len(a)
    for i in range(size):
        an, ar, al = a[i]
        bn, br, bl = b[i]
        for j in range(size):
            gn, gr, gl = a[j]
            hn, hr, hl = b[j]
            ge_a = (gn & ~an) == 0 and (ar & ~gr) == 0 and (al & ~gl) == 0
            ge_b = (hn & ~bn) == 0 and (br & ~hr) == 0 and (bl & ~hl) == 0
            if ge_a != ge_b:
                return i * size + j
    return -1
