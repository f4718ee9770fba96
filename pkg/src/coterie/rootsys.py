"""Root-system data for the simple types A-G.

Node numbering and edge sets follow the source tables this package
reproduces (they differ from Bourbaki for some exceptional types):

  A_n, B_n, C_n   chain 1-2-...-n; B_n has alpha_n short, C_n has
                  alpha_n long, the other nodes carrying the other length
  D_n             chain 1-...-(n-2) with both n-1 and n attached to n-2
  E6              chain 1-2-3-4-5 with node 6 attached to node 3
  E7              chain 1-2-3-4-5-6 with node 7 attached to node 4
  E8              chain 1-2-3-4-5-6-7 with node 8 attached to node 5
  F4              chain 1-2-3-4, alpha_1 and alpha_2 short
  G2              edge 1-2, alpha_1 short

Short roots are normalized to squared length 2. Everything downstream
(inequalities, faces, arrangements) consumes the RootSystem built here;
inv_coeffs is always computed by exact inversion, never tabulated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exactla

MAX_RANK = 12
_FAMILY_MIN = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_FAMILY_MAX = {"A": MAX_RANK, "B": MAX_RANK, "C": MAX_RANK, "D": MAX_RANK, "E": 8, "F": 4, "G": 2}


class UnsupportedTypeError(ValueError):
    """Type string outside the supported simple types."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type(s) -> SimpleType:
    if isinstance(s, SimpleType):
        return s
    m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", str(s).strip())
    if not m:
        raise UnsupportedTypeError(f"cannot parse type {s!r} (expected e.g. 'A4', 'E8')")
    family = m.group(1).upper()
    rank = int(m.group(2))
    if not _FAMILY_MIN[family] <= rank <= _FAMILY_MAX[family]:
        raise UnsupportedTypeError(
            f"rank {rank} out of range for family {family} "
            f"(supported: {_FAMILY_MIN[family]}..{_FAMILY_MAX[family]})"
        )
    return SimpleType(family, rank)


def all_types(max_rank: int = MAX_RANK):
    """All supported simple types with rank <= max_rank, deterministic order."""
    out = []
    for family in "ABCDEFG":
        lo, hi = _FAMILY_MIN[family], min(_FAMILY_MAX[family], max_rank)
        out.extend(SimpleType(family, n) for n in range(lo, hi + 1))
    return out


def _edges_and_norms(stype: SimpleType):
    """1-based edge list and squared lengths per node."""
    n = stype.rank
    f = stype.family
    chain = [(i, i + 1) for i in range(1, n)]
    if f == "A":
        return chain, [2] * n
    if f == "B":
        return chain, [4] * (n - 1) + [2]
    if f == "C":
        return chain, [2] * (n - 1) + [4]
    if f == "D":
        edges = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        return edges, [2] * n
    if f == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(branch, n)]
        return edges, [2] * n
    if f == "F":
        return chain, [2, 2, 4, 4]
    return chain, [2, 6]  # G2


@dataclass(frozen=True)
class RootSystem:
    """Cartan data for one simple type.

    cartan[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j); form[i][j] is the
    W-invariant bilinear form (alpha_i, alpha_j) with short roots of squared
    length 2; inv_coeffs = (cartan^T)^-1, whose column alpha holds the
    fundamental weight lambda_alpha in root coordinates; edges are the
    0-based tree edges (i, j) with i < j.
    """

    stype: SimpleType
    cartan: tuple
    form: tuple
    inv_coeffs: tuple
    edges: tuple

    def __hash__(self):
        # the nested Fraction tables make the generated hash O(rank^2) per
        # call, and cache lookups keyed on the system hash constantly
        return hash(self.stype)

    @property
    def rank(self) -> int:
        return self.stype.rank

    def __str__(self) -> str:
        return str(self.stype)


def build(stype) -> RootSystem:
    return _build(parse_type(stype))


@lru_cache(maxsize=None)
def _build(stype: SimpleType) -> RootSystem:
    n = stype.rank
    edges1, norms = _edges_and_norms(stype)
    edges = tuple(sorted((i - 1, j - 1) if i < j else (j - 1, i - 1) for i, j in edges1))
    form = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = Fraction(norms[i])
    for i, j in edges:
        form[i][j] = form[j][i] = Fraction(-max(norms[i], norms[j]), 2)
    cartan = [[2 * form[i][j] / form[j][j] for j in range(n)] for i in range(n)]
    for row in cartan:
        for v in row:
            if v.denominator != 1:
                raise AssertionError(f"non-integral Cartan entry for {stype}")
    cartan = tuple(tuple(v for v in row) for row in cartan)
    inv_coeffs = exactla.mat_inverse(exactla.mat_transpose(cartan))
    return RootSystem(
        stype=stype,
        cartan=cartan,
        form=tuple(tuple(row) for row in form),
        inv_coeffs=inv_coeffs,
        edges=edges,
    )


def symmetrizers(rs: RootSystem) -> tuple:
    """d_i = (alpha_i, alpha_i)/2, so form[i][j] = d_j * cartan[i][j]."""
    return tuple(rs.form[i][i] / 2 for i in range(rs.rank))


def coeff(rs: RootSystem, beta: int, alpha: int) -> Fraction:
    """Entry c_{beta,alpha} of inv_coeffs (0-based nodes)."""
    return rs.inv_coeffs[beta][alpha]


def fundamental_weight(rs: RootSystem, alpha: int) -> tuple:
    """Fundamental weight lambda_alpha in root coordinates: column alpha of inv_coeffs."""
    if not 0 <= alpha < rs.rank:
        raise ValueError(f"node {alpha} out of range for {rs}")
    return tuple(rs.inv_coeffs[b][alpha] for b in range(rs.rank))


def inner(rs: RootSystem, v, w) -> Fraction:
    """W-invariant bilinear form on root coordinates: v^T . form . w."""
    v = exactla.vec(v)
    w = exactla.vec(w)
    if len(v) != rs.rank or len(w) != rs.rank:
        raise ValueError(f"vectors must have length {rs.rank}")
    return exactla.vec_dot(v, exactla.mat_vec(rs.form, w))


@dataclass(frozen=True)
class WeylElement:
    word: tuple
    matrix: tuple


def simple_reflection(rs: RootSystem, alpha: int) -> WeylElement:
    """s_alpha acting on root coordinates: x - <x, alpha^v> alpha.

    <x, alpha^v> = (cartan^T x)_alpha, so the matrix is the identity with
    row alpha replaced by e_alpha - (column alpha of cartan)^T.
    """
    if not 0 <= alpha < rs.rank:
        raise ValueError(f"node {alpha} out of range for {rs}")
    n = rs.rank
    rows = []
    for k in range(n):
        if k != alpha:
            rows.append(exactla.unit(n, k))
        else:
            rows.append(tuple(Fraction((1 if j == k else 0) - rs.cartan[j][k]) for j in range(n)))
    return WeylElement(word=(alpha,), matrix=tuple(rows))


def weyl_apply(w: WeylElement, x) -> tuple:
    return exactla.mat_vec(w.matrix, exactla.vec(x))


def coroot_pairing(rs: RootSystem, x) -> tuple:
    """(<x, alpha^v>)_alpha = cartan^T . x for x in root coordinates."""
    return exactla.mat_vec(exactla.mat_transpose(rs.cartan), exactla.vec(x))


def dominant_in_root_coords(rs: RootSystem, x, strict: bool = False) -> bool:
    """x in the closed (strict: open) Weyl chamber, root coordinates."""
    pair = coroot_pairing(rs, x)
    if strict:
        return all(v > 0 for v in pair)
    return all(v >= 0 for v in pair)


def tree_path(rs: RootSystem, start: int, goal: int) -> tuple:
    """Unique path start..goal in the Dynkin tree (inclusive, 0-based)."""
    adjacency = {k: [] for k in range(rs.rank)}
    for i, j in rs.edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    prev = {start: None}
    queue = [start]
    while queue:
        node = queue.pop(0)
        if node == goal:
            break
        for nxt in adjacency[node]:
            if nxt not in prev:
                prev[nxt] = node
                queue.append(nxt)
    path = [goal]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


def chain_identity_check(rs: RootSystem) -> bool:
    """c_{alpha,gamma} = (c_{alpha,beta}/c_{beta,beta}) c_{beta,gamma} along tree paths.

    Checked for every ordered pair (alpha, gamma) and every interior node
    beta of the connecting path.
    """
    c = rs.inv_coeffs
    for a in range(rs.rank):
        for g in range(rs.rank):
            if a == g:
                continue
            path = tree_path(rs, a, g)
            for b in path[1:-1]:
                if c[a][g] != c[a][b] * c[b][g] / c[b][b]:
                    return False
    return True
