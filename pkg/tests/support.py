"""Shared helpers for the test suite: seeded exact samplers.

All sampling is driven by random.Random instances with fixed seeds recorded
in the tests, and produces Fractions with bounded denominators so every
check stays exact and reproducible.
"""

from fractions import Fraction

from coterie import exactla, rootsys


def rand_fraction(rng, lo=-2, hi=4, max_den=60) -> Fraction:
    q = rng.randint(1, max_den)
    p = rng.randint(lo * q, hi * q)
    return Fraction(p, q)


def rand_vec(rng, n, lo=-2, hi=4, max_den=60) -> tuple:
    return tuple(rand_fraction(rng, lo, hi, max_den) for _ in range(n))


def rand_positive_vec(rng, n, hi=4, max_den=60) -> tuple:
    out = []
    for _ in range(n):
        q = rng.randint(1, max_den)
        p = rng.randint(1, hi * q)
        out.append(Fraction(p, q))
    return tuple(out)


def bfs_order(rs):
    """Nodes in BFS order from node 0 with their tree parents."""
    adjacency = {k: [] for k in range(rs.rank)}
    for i, j in rs.edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    seen = {0: None}
    order = [(0, None)]
    queue = [0]
    while queue:
        node = queue.pop(0)
        for nxt in sorted(adjacency[node]):
            if nxt not in seen:
                seen[nxt] = node
                order.append((nxt, node))
                queue.append(nxt)
    return order


def sample_member(rs, rng) -> tuple:
    """Exact interior member: walk the Dynkin tree picking each coordinate
    inside the open interval its parent's constraints allow."""
    c = rs.inv_coeffs
    coords = [None] * rs.rank
    for node, parent in bfs_order(rs):
        if parent is None:
            coords[node] = Fraction(rng.randint(1, 240), rng.randint(1, 60))
            continue
        p = parent
        lo = coords[p] * c[node][p] / c[p][p]
        hi = coords[p] * c[node][node] / c[p][node]
        assert lo < hi
        den = rng.randint(2, 24)
        t = Fraction(rng.randint(1, den - 1), den)
        coords[node] = lo + t * (hi - lo)
    return tuple(coords)


def sample_dominant(rs, rng, strict=True) -> tuple:
    """Random dominant vector: nonnegative (positive if strict) combination
    of the fundamental weights."""
    weights = []
    for _ in range(rs.rank):
        q = rng.randint(1, 60)
        p = rng.randint(1 if strict else 0, 4 * q)
        weights.append(Fraction(p, q))
    cols = exactla.mat_transpose(rs.inv_coeffs)
    x = exactla.zeros(rs.rank)
    for w, col in zip(weights, cols):
        x = exactla.vec_add(x, exactla.vec_scale(w, col))
    return x
