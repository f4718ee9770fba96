"""Face lattice of the closed coterie cone via Dynkin edge orientations.

Every face is named by assigning each Dynkin edge {i, j} (i < j) one of
three states: '>' makes the (i, j) inequality an equality, '<' makes the
(j, i) inequality an equality, '-' leaves the edge slack.  With rank n
there are 3^(n-1) orientations; the fully oriented ones cut out the
2^(n-1) extremal rays.

The lattice is compared against the face lattice of an (n-1)-cube built
the blunt way, as explicit vertex subsets ordered by inclusion, and the
orientation-to-face map is certified geometrically through exact ranks
and per-face interior points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional

from . import _kernels_py, cone, exactla, rootsys
from ._backend import kernels
from .exactla import EQ, GE, ConeSystem, constraint

LEFT = "<"
NEUTRAL = "-"
RIGHT = ">"
STATES = (LEFT, NEUTRAL, RIGHT)

CUBE_RANK_BOUND = 9


@dataclass(frozen=True)
class Orientation:
    """One state per Dynkin edge, edges in canonical (min, max) order."""

    edges: tuple
    states: tuple

    def __post_init__(self):
        if len(self.edges) != len(self.states):
            raise ValueError("one state per edge required")
        if any(s not in STATES for s in self.states):
            raise ValueError(f"states must be drawn from {STATES}")

    def __str__(self) -> str:
        return "".join(self.states)

    @property
    def oriented_count(self) -> int:
        return sum(1 for s in self.states if s != NEUTRAL)

    @property
    def fully_oriented(self) -> bool:
        return NEUTRAL not in self.states


def orientation(rs: rootsys.RootSystem, states) -> Orientation:
    """Build an Orientation from a string like '>><' or a state sequence."""
    return Orientation(edges=rs.edges, states=tuple(states))


def all_orientations(rs: rootsys.RootSystem) -> tuple:
    return tuple(
        Orientation(edges=rs.edges, states=s)
        for s in product(STATES, repeat=len(rs.edges))
    )


@dataclass(frozen=True)
class Face:
    orientation: Orientation
    system: ConeSystem
    dim: int


@lru_cache(maxsize=None)
def _edge_rows(rs: rootsys.RootSystem, i: int, j: int) -> tuple:
    """Cleared integer functionals of the (i, j) and (j, i) inequalities."""
    n = rs.rank
    fwd = [Fraction(0)] * n
    fwd[i] = Fraction(1)
    fwd[j] = -cone.ratio(rs, i, j)
    bwd = [Fraction(0)] * n
    bwd[j] = Fraction(1)
    bwd[i] = -cone.ratio(rs, j, i)
    return exactla.clear_row(fwd), exactla.clear_row(bwd)


def face_of(rs: rootsys.RootSystem, f: Orientation) -> Face:
    """The face cut out by f: the closed reduced system with the oriented
    edges' inequalities substituted by equalities."""
    if f.edges != rs.edges:
        raise ValueError("orientation does not belong to this root system")
    n = rs.rank
    cons = [constraint(exactla.unit(n, a), GE, 0) for a in range(n)]
    eq_rows = []
    for (i, j), state in zip(rs.edges, f.states):
        fwd, bwd = _edge_rows(rs, i, j)
        cons.append(constraint(fwd, EQ if state == RIGHT else GE, 0))
        cons.append(constraint(bwd, EQ if state == LEFT else GE, 0))
        if state == RIGHT:
            eq_rows.append(list(fwd))
        elif state == LEFT:
            eq_rows.append(list(bwd))
    dim = n - exactla.mat_rank(eq_rows) if eq_rows else n
    return Face(orientation=f, system=ConeSystem(n, tuple(cons)), dim=dim)


@dataclass(frozen=True)
class ExtremalRay:
    orientation: Orientation
    vector: Optional[tuple]
    anomalies: tuple = ()


def _normalize_ray(k) -> tuple:
    # last coordinate scaled to 1 when possible, else primitive with
    # positive leading entry
    if k[-1] != 0:
        return tuple(Fraction(c) / k[-1] for c in k)
    return exactla.primitive(k)


def extremal_rays(rs: rootsys.RootSystem) -> tuple:
    """One ray per fully oriented diagram; violations of the expected
    geometry are attached as anomalies, never dropped."""
    n = rs.rank
    out = []
    for f in all_orientations(rs):
        if not f.fully_oriented:
            continue
        rows = []
        for (i, j), state in zip(rs.edges, f.states):
            fwd, bwd = _edge_rows(rs, i, j)
            rows.append(list(fwd if state == RIGHT else bwd))
        if rows:
            kernel = exactla.solve_linear(rows, [Fraction(0)] * len(rows)).kernel
        else:
            # edgeless rank-1 diagram: the whole line is the kernel
            kernel = tuple(exactla.unit(n, i) for i in range(n))
        anomalies = []
        if len(kernel) != 1:
            anomalies.append(f"equality system has kernel dimension {len(kernel)}")
            out.append(ExtremalRay(orientation=f, vector=None, anomalies=tuple(anomalies)))
            continue
        v = _normalize_ray(kernel[0])
        if any(c <= 0 for c in v):
            anomalies.append(f"ray {v} leaves the positive orthant")
        if not cone.member(rs, v, "closed", "edges"):
            anomalies.append(f"ray {v} is outside the closed cone")
        if n > 1 and cone.member(rs, v, "open", "edges"):
            # rank 1 is the degenerate case where the only ray is interior
            anomalies.append(f"ray {v} is interior, expected boundary")
        out.append(ExtremalRay(orientation=f, vector=v, anomalies=tuple(anomalies)))
    return tuple(out)


def poset_order(f: Orientation, g: Orientation) -> bool:
    """f >= g: f is g with some arrows erased."""
    if f.edges != g.edges:
        raise ValueError("orientations live on different edge sets")
    for a, b in zip(f.states, g.states):
        if b == NEUTRAL and a != NEUTRAL:
            return False
        if a == RIGHT and b != RIGHT:
            return False
        if a == LEFT and b != LEFT:
            return False
    return True


# ---------------------------------------------------------------------------
# cube comparison


def _rule_triples(orients) -> list:
    """(neutral, right, left) edge bitmasks per orientation, the triple
    layout the kernels compare: f >= g iff g.n subset f.n, f.r subset g.r,
    f.l subset g.l."""
    triples = []
    for o in orients:
        l = n = r = 0
        for pos, s in enumerate(o.states):
            bit = 1 << pos
            if s == LEFT:
                l |= bit
            elif s == NEUTRAL:
                n |= bit
            else:
                r |= bit
        triples.append((n, r, l))
    return triples


def _cube_vertex_sets(m: int) -> list:
    """Faces of the m-cube in the enumeration order of all_orientations,
    each as a bitmask over the 2^m vertices ('<' pins 0, '>' pins 1)."""
    sets = []
    for states in product(STATES, repeat=m):
        vs = 0
        for v in range(1 << m):
            for pos, s in enumerate(states):
                bit = (v >> pos) & 1
                if (s == LEFT and bit) or (s == RIGHT and not bit):
                    break
            else:
                vs |= 1 << v
        sets.append(vs)
    return sets


def _cube_triples(m: int) -> list:
    """Encode vertex-set inclusion in the kernels' (n, r, l) comparison.
    The n slot tests subset as-is, so (vs, 0, 0) makes the order literal
    inclusion of vertex sets.  The compiled kernel truncates at 64 bits,
    so for m = 7 the 128-bit set is split: low half in the n slot, high
    half complemented in the r slot (whose test runs the other way)."""
    sets = _cube_vertex_sets(m)
    if m == 7:
        full = (1 << 64) - 1
        return [(vs & full, full ^ (vs >> 64), 0) for vs in sets]
    return [(vs, 0, 0) for vs in sets]


def _order_pairs_disagree(rule_triples, cube_triples, m: int) -> int:
    if m <= 7:
        return kernels.order_pairs_disagree(rule_triples, cube_triples)
    # past 128 cube vertices nothing fits the compiled kernel's word size;
    # the pure kernel takes arbitrary ints
    return _kernels_py.order_pairs_disagree(rule_triples, cube_triples)


def _interior_point(rays_by_states, g: Orientation):
    """Sum of the rays of all full orientings of g's neutral edges; lands in
    the relative interior of face_of(g).  Expects integer ray vectors."""
    total = None
    neutral_positions = [p for p, s in enumerate(g.states) if s == NEUTRAL]
    for combo in product((LEFT, RIGHT), repeat=len(neutral_positions)):
        states = list(g.states)
        for p, s in zip(neutral_positions, combo):
            states[p] = s
        v = rays_by_states[tuple(states)]
        total = v if total is None else tuple(a + b for a, b in zip(total, v))
    return total


def _tight_states(rs: rootsys.RootSystem, point) -> Optional[tuple]:
    """Which edge inequalities the integer point makes tight; None if the
    point is not strictly positive or is tight in both directions of one
    edge."""
    if any(c <= 0 for c in point):
        return None
    states = []
    for i, j in rs.edges:
        fwd, bwd = _edge_rows(rs, i, j)
        vf = sum(c * x for c, x in zip(fwd, point))
        vb = sum(c * x for c, x in zip(bwd, point))
        if vf < 0 or vb < 0:
            return None
        if vf == 0 and vb == 0:
            return None
        states.append(RIGHT if vf == 0 else LEFT if vb == 0 else NEUTRAL)
    return tuple(states)


def cube_isomorphism_check(rs: rootsys.RootSystem, bound: int = CUBE_RANK_BOUND) -> bool:
    """Verify that orientations, ordered by arrow erasure, form the face
    lattice of the (rank-1)-cube, and that the geometry agrees: exact face
    dimensions, covers dropping dimension by one, and an interior point per
    face whose tight set reproduces the orientation exactly."""
    if rs.rank > bound:
        raise ValueError(f"rank {rs.rank} exceeds the bound {bound}")
    m = len(rs.edges)
    orients = all_orientations(rs)

    # combinatorial half: rule order vs vertex-set inclusion on the cube
    if _order_pairs_disagree(_rule_triples(orients), _cube_triples(m), m) != -1:
        return False

    # geometric half; stays in integer arithmetic throughout
    rows = {}
    for pos, (i, j) in enumerate(rs.edges):
        fwd, bwd = _edge_rows(rs, i, j)
        rows[pos] = {RIGHT: fwd, LEFT: bwd}
    dims = {}
    for o in orients:
        eq_rows = [
            rows[pos][s] for pos, s in enumerate(o.states) if s != NEUTRAL
        ]
        d = rs.rank - (kernels.rank_of(eq_rows) if eq_rows else 0)
        if d != rs.rank - o.oriented_count:
            return False
        dims[o.states] = d
    for o in orients:
        for pos, s in enumerate(o.states):
            if s != NEUTRAL:
                continue
            for t in (LEFT, RIGHT):
                below = list(o.states)
                below[pos] = t
                if dims[tuple(below)] != dims[o.states] - 1:
                    return False

    rays_by_states = {}
    for ray in extremal_rays(rs):
        if ray.anomalies or ray.vector is None:
            return False
        rays_by_states[ray.orientation.states] = exactla.clear_row(ray.vector)
    for o in orients:
        point = _interior_point(rays_by_states, o)
        if _tight_states(rs, point) != o.states:
            return False
    return True
