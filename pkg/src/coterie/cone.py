"""The coterie cone of a root system, and its generalizations.

In root coordinates x = (a_1 .. a_n) the open cone is cut out by, for each
ordered pair of distinct simple roots (beta, alpha),

    a_beta > (c_{beta,alpha} / c_{alpha,alpha}) a_alpha

together with a_alpha > 0, where c_{beta,alpha} are the weight coordinates
(rootsys.inv_coeffs).  Only the pairs joined by a Dynkin edge are needed;
the rest follow by telescoping ratios along the tree path, so the reduced
description lists each edge in both directions.  The closed cone replaces
every > by >=.

Three membership routes are kept deliberately independent: evaluating the
reduced system, evaluating the full system, and the geometric test that
checks r_alpha(x) > 0 and positivity of the off-alpha coordinates of
x - r_alpha(x) * weight_alpha for every alpha.

A general instance replaces the weight data by an arrangement pulled back
through a linear map theta_star; membership of a shift delta is decided by
eliminating the quantifier with exact Fourier-Motzkin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional

from . import arrangement as arrmod
from . import exactla, rootsys
from .exactla import EQ, GE, GT, ConeSystem, ResourceCapError, constraint

SUBSET_CAP = 1_000_000


class MembershipPreconditionError(ValueError):
    """An operation required open-cone membership that does not hold."""


class DegenerateInstanceError(ValueError):
    """General instance with no well-defined ray data."""


class InstanceFormatError(ValueError):
    """Malformed instance file."""


# ---------------------------------------------------------------------------
# root-coordinate description


def ratio(rs: rootsys.RootSystem, beta: int, alpha: int) -> Fraction:
    """Coefficient of a_alpha in the (beta, alpha) inequality."""
    return rs.inv_coeffs[beta][alpha] / rs.inv_coeffs[alpha][alpha]


def ordered_pairs(rs: rootsys.RootSystem, reduced: bool = True) -> tuple:
    if reduced:
        pairs = []
        for i, j in rs.edges:
            pairs.append((i, j))
            pairs.append((j, i))
        return tuple(sorted(pairs))
    n = rs.rank
    return tuple((b, a) for b in range(n) for a in range(n) if a != b)


@dataclass(frozen=True)
class CoterieDescription:
    rs: rootsys.RootSystem
    reduced: bool
    pairs: tuple
    open_system: ConeSystem
    closed_system: ConeSystem


@lru_cache(maxsize=None)
def inequalities(rs: rootsys.RootSystem, reduced: bool = True) -> CoterieDescription:
    """Defining inequalities, positivity rows first, then pair rows."""
    n = rs.rank
    pairs = ordered_pairs(rs, reduced)

    def rows(rel):
        cons = [constraint(exactla.unit(n, a), rel, 0) for a in range(n)]
        for b, a in pairs:
            f = [Fraction(0)] * n
            f[b] = Fraction(1)
            f[a] = -ratio(rs, b, a)
            cons.append(constraint(f, rel, 0))
        return tuple(cons)

    return CoterieDescription(
        rs=rs,
        reduced=reduced,
        pairs=pairs,
        open_system=ConeSystem(n, rows(GT)),
        closed_system=ConeSystem(n, rows(GE)),
    )


def r_alpha(rs: rootsys.RootSystem, x, alpha: int) -> Fraction:
    """Height of x over the alpha wall: a_alpha / c_{alpha,alpha}."""
    x = exactla.vec(x)
    if len(x) != rs.rank:
        raise ValueError(f"point has length {len(x)}, rank is {rs.rank}")
    return x[alpha] / rs.inv_coeffs[alpha][alpha]


def _member_geometric(rs: rootsys.RootSystem, x, strict: bool) -> bool:
    # r_alpha(x) positive and x - r_alpha(x) * weight_alpha positive away
    # from alpha; the alpha coordinate of the residual is zero by design.
    for a in range(rs.rank):
        r = r_alpha(rs, x, a)
        if r < 0 or (strict and r == 0):
            return False
        residual = exactla.vec_sub(x, exactla.vec_scale(r, rootsys.fundamental_weight(rs, a)))
        for b in range(rs.rank):
            if b == a:
                continue
            if residual[b] < 0 or (strict and residual[b] == 0):
                return False
    return True


def member(rs: rootsys.RootSystem, x, mode: str = "open", method: str = "edges") -> bool:
    """Membership of x in the coterie cone.

    mode: 'open' or 'closed'.  method: 'edges' (reduced system), 'full'
    (all ordered pairs), or 'geometric' (weight-residual test).
    """
    if mode not in ("open", "closed"):
        raise ValueError(f"unknown mode {mode!r}")
    if method not in ("edges", "full", "geometric"):
        raise ValueError(f"unknown method {method!r}")
    x = exactla.vec(x)
    if len(x) != rs.rank:
        raise ValueError(f"point has length {len(x)}, rank is {rs.rank}")
    if method == "geometric":
        return _member_geometric(rs, x, strict=(mode == "open"))
    desc = inequalities(rs, reduced=(method == "edges"))
    system = desc.open_system if mode == "open" else desc.closed_system
    return system.satisfies(x)


def member_all(rs: rootsys.RootSystem, x, mode: str = "open") -> dict:
    """All three membership routes at once; they must agree."""
    return {m: member(rs, x, mode, m) for m in ("edges", "full", "geometric")}


def additivity_check(rs: rootsys.RootSystem, x, y) -> bool:
    """x + y stays in the open cone and every r_alpha adds."""
    if not member(rs, x, "open", "edges"):
        raise MembershipPreconditionError("x is not in the open cone")
    if not member(rs, y, "open", "edges"):
        raise MembershipPreconditionError("y is not in the open cone")
    s = exactla.vec_add(exactla.vec(x), exactla.vec(y))
    if not member(rs, s, "open", "edges"):
        return False
    return all(
        r_alpha(rs, s, a) == r_alpha(rs, x, a) + r_alpha(rs, y, a) for a in range(rs.rank)
    )


# ---------------------------------------------------------------------------
# cross-section polytopes


@dataclass(frozen=True)
class CrossSection:
    rs: rootsys.RootSystem
    y: tuple
    system: ConeSystem


def cross_section(rs: rootsys.RootSystem, y) -> CrossSection:
    """Dominant vectors lambda with lambda_k <= y_k coordinatewise.

    y must itself lie in the nonnegative orthant of root coordinates.
    """
    y = exactla.vec(y)
    n = rs.rank
    if len(y) != n:
        raise ValueError(f"bound vector has length {len(y)}, rank is {n}")
    if any(v < 0 for v in y):
        raise ValueError("bound vector must be coordinatewise nonnegative")
    ct = exactla.mat_transpose(rs.cartan)
    cons = [constraint(row, GE, 0) for row in ct]
    for k in range(n):
        f = [Fraction(0)] * n
        f[k] = Fraction(-1)
        cons.append(constraint(f, GE, -y[k]))
    return CrossSection(rs=rs, y=y, system=ConeSystem(n, tuple(cons)))


def polytope_vertices(cs: CrossSection, subset_cap: int = SUBSET_CAP) -> tuple:
    """All vertices, by solving every n-subset of constraints as equalities."""
    n = cs.rs.rank
    rows = [(c.functional, c.bound) for c in cs.system.constraints]
    if comb(len(rows), n) > subset_cap:
        raise ResourceCapError(
            f"{comb(len(rows), n)} active sets exceed the cap {subset_cap}"
        )
    verts = set()
    for subset in combinations(range(len(rows)), n):
        a = [list(rows[i][0]) for i in subset]
        b = [rows[i][1] for i in subset]
        try:
            sol = exactla.solve_linear(a, b)
        except exactla.InconsistentSystemError:
            continue
        if sol.kernel:
            continue
        if cs.system.satisfies(sol.particular):
            verts.add(tuple(sol.particular))
    return tuple(sorted(verts))


def orbit_polytope_vertices(
    rs: rootsys.RootSystem, cs: CrossSection, cap: int = arrmod.ORBIT_CAP
) -> tuple:
    """Weyl-orbit closure of the cross-section vertex set."""
    mats = [rootsys.simple_reflection(rs, a).matrix for a in range(rs.rank)]
    seen = set(polytope_vertices(cs))
    queue = list(seen)
    while queue:
        v = queue.pop()
        for m in mats:
            w = tuple(exactla.mat_vec(m, v))
            if w not in seen:
                if len(seen) >= cap:
                    raise ResourceCapError(f"orbit closure exceeds the cap {cap}")
                seen.add(w)
                queue.append(w)
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# general instances


@dataclass(frozen=True)
class GeneralCoterieInstance:
    """Arrangement data pulled back through a rational linear map.

    theta_star is an m x n matrix (rows = functionals on the rank-n root
    space evaluated on a shift space of dimension m read column-wise; the
    composite nu_i . theta_star must equal minus the i-th fundamental
    functional of the arrangement).
    """

    arr: arrmod.Arrangement
    theta_star: tuple
    nu: tuple

    def __post_init__(self):
        n = self.arr.rs.rank
        theta = tuple(tuple(Fraction(v) for v in row) for row in self.theta_star)
        if any(len(row) != n for row in theta):
            raise DegenerateInstanceError("theta_star rows must have length rank")
        m = len(theta)
        nus = tuple(tuple(Fraction(v) for v in row) for row in self.nu)
        if len(nus) != len(self.arr.fundamental):
            raise DegenerateInstanceError(
                "need exactly one nu functional per fundamental hyperplane"
            )
        if any(len(row) != m for row in nus):
            raise DegenerateInstanceError("nu functionals must act on the theta domain")
        object.__setattr__(self, "theta_star", theta)
        object.__setattr__(self, "nu", nus)
        for i, (nu_i, h) in enumerate(zip(nus, self.arr.fundamental)):
            comp = tuple(
                sum(nu_i[k] * theta[k][j] for k in range(m)) for j in range(n)
            )
            want = tuple(-Fraction(c) for c in h.functional)
            if comp != want:
                raise DegenerateInstanceError(
                    f"nu_{i} . theta_star = {comp} but the arrangement requires {want}"
                )

    @property
    def rs(self) -> rootsys.RootSystem:
        return self.arr.rs

    @property
    def shift_dim(self) -> int:
        return len(self.theta_star)

    def composite(self, i: int) -> tuple:
        """nu_i . theta_star as a functional on root coordinates."""
        n = self.arr.rs.rank
        m = len(self.theta_star)
        return tuple(
            sum(self.nu[i][k] * self.theta_star[k][j] for k in range(m)) for j in range(n)
        )


def canonical_instance(rs: rootsys.RootSystem) -> GeneralCoterieInstance:
    """theta_star the identity, nu_i the coordinate functionals; recovers
    the plain coterie cone, with r_i = the scaled fundamental weights."""
    n = rs.rank
    return GeneralCoterieInstance(
        arr=arrmod.canonical_arrangement(rs),
        theta_star=exactla.identity(n),
        nu=tuple(tuple(Fraction(1 if j == i else 0) for j in range(n)) for i in range(n)),
    )


def nu_of(inst: GeneralCoterieInstance, i: int, delta) -> Fraction:
    delta = exactla.vec(delta)
    if len(delta) != inst.shift_dim:
        raise ValueError(f"shift has length {len(delta)}, expected {inst.shift_dim}")
    return exactla.vec_dot(exactla.vec(inst.nu[i]), delta)


def r_i_general(inst: GeneralCoterieInstance, i: int, delta) -> tuple:
    """The ray point of the i-th wall for the shift delta.

    Solves: x orthogonal (under the form) to the kernel of nu_i . theta_star,
    normalized by (nu_i . theta_star)(x) = nu_i(delta).
    """
    rs = inst.rs
    n = rs.rank
    comp = list(inst.composite(i))
    if not any(comp):
        raise DegenerateInstanceError(
            f"nu_{i} . theta_star is identically zero; the ray direction is undefined"
        )
    target = nu_of(inst, i, delta)
    kernel = exactla.solve_linear([comp], [Fraction(0)]).kernel
    # (mu, x)_B as a row functional; the form is symmetric so B mu works.
    rows = [exactla.mat_vec(rs.form, list(mu)) for mu in kernel]
    rows.append(comp)
    rhs = [Fraction(0)] * len(kernel) + [target]
    try:
        sol = exactla.solve_linear(rows, rhs)
    except exactla.InconsistentSystemError:
        raise DegenerateInstanceError(
            f"no ray point for wall {i}: orthogonality system inconsistent"
        ) from None
    if sol.kernel:
        raise DegenerateInstanceError(f"ray point for wall {i} is not unique")
    return tuple(sol.particular)


def u_value(inst: GeneralCoterieInstance, i: int, delta, lam) -> Fraction:
    """nu_i(delta - theta_star(lam)) with theta_star acting column-wise."""
    lam = exactla.vec(lam)
    if len(lam) != inst.rs.rank:
        raise ValueError(f"lambda has length {len(lam)}, rank is {inst.rs.rank}")
    image = exactla.mat_vec(inst.theta_star, lam)
    delta = exactla.vec(delta)
    if len(delta) != inst.shift_dim:
        raise ValueError(f"shift has length {len(delta)}, expected {inst.shift_dim}")
    return exactla.vec_dot(exactla.vec(inst.nu[i]), exactla.vec_sub(delta, image))


def epsilon_i(inst: GeneralCoterieInstance, i: int, delta) -> Fraction:
    """nu_i(delta) / (r_i, r_i)."""
    r = r_i_general(inst, i, delta)
    rr = rootsys.inner(inst.rs, r, r)
    if rr == 0:
        raise DegenerateInstanceError(
            f"(r_{i}, r_{i}) = 0; the wall height is undefined"
        )
    return nu_of(inst, i, delta) / rr


def u_identity_check(inst: GeneralCoterieInstance, i: int, delta, lam) -> bool:
    """u_i(lam) equals epsilon_i * (r_i - lam, r_i)."""
    r = r_i_general(inst, i, delta)
    if not any(r):
        raise DegenerateInstanceError(f"r_{i}(delta) = 0; the identity needs a nonzero ray")
    lam = exactla.vec(lam)
    lhs = u_value(inst, i, delta, lam)
    rhs = epsilon_i(inst, i, delta) * rootsys.inner(inst.rs, exactla.vec_sub(list(r), lam), r)
    return lhs == rhs


def general_member_systems(inst: GeneralCoterieInstance, delta) -> tuple:
    """One existential system per wall: a strictly dominant lambda on the
    i-th wall sphere, strictly inside every other wall sphere."""
    rs = inst.rs
    n = rs.rank
    rays = [r_i_general(inst, i, delta) for i in range(len(inst.nu))]
    ct = exactla.mat_transpose(rs.cartan)
    systems = []
    for i in range(len(rays)):
        cons = [constraint(row, GT, 0) for row in ct]
        for j, r in enumerate(rays):
            # (r_j - lam, r_j) >= 0 with equality exactly at j = i:
            # functional -(B r_j), bound -(r_j, r_j).
            f = exactla.vec_scale(Fraction(-1), exactla.mat_vec(rs.form, list(r)))
            bound = -rootsys.inner(rs, r, r)
            cons.append(constraint(f, EQ if j == i else GT, bound))
        systems.append(ConeSystem(n, tuple(cons)))
    return tuple(systems)


def general_member(inst: GeneralCoterieInstance, delta, max_rows: int = 10**6) -> bool:
    """Whether the shift delta lies in the general coterie set.

    Requires nu_i(delta) >= 0 for every i.  The zero shift is excluded:
    every wall sphere degenerates to the origin, which is not strictly
    dominant, so no witness exists.
    """
    delta = exactla.vec(delta)
    vals = [nu_of(inst, i, delta) for i in range(len(inst.nu))]
    if any(v < 0 for v in vals):
        raise MembershipPreconditionError(
            "delta must satisfy nu_i(delta) >= 0 for every wall"
        )
    if not any(delta):
        return False
    for system in general_member_systems(inst, delta):
        if not exactla.feasible(system, max_rows=max_rows):
            return False
    return True


def parse_instance(text: str) -> GeneralCoterieInstance:
    """Parse an instance file: arrangement lines, then `theta` rows, then
    `nu` rows.  Rational entries p/q are allowed in theta and nu."""
    arr_lines = []
    theta_rows = []
    nu_rows = []
    section = arr_lines
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "theta":
            if section is not arr_lines:
                raise InstanceFormatError("duplicate theta section")
            section = theta_rows
            continue
        if line == "nu":
            if section is not theta_rows:
                raise InstanceFormatError("nu section must follow theta")
            section = nu_rows
            continue
        section.append(line)
    if section is not nu_rows:
        raise InstanceFormatError("instance file needs theta and nu sections")
    try:
        arr = arrmod.parse_arrangement("\n".join(arr_lines))
    except arrmod.ArrangementFormatError as exc:
        raise InstanceFormatError(str(exc)) from None

    def parse_rows(lines, label):
        rows = []
        for line in lines:
            try:
                rows.append(tuple(Fraction(tok) for tok in line.split()))
            except (ValueError, ZeroDivisionError):
                raise InstanceFormatError(f"bad {label} row {line!r}") from None
        if not rows:
            raise InstanceFormatError(f"empty {label} section")
        return tuple(rows)

    return GeneralCoterieInstance(
        arr=arr,
        theta_star=parse_rows(theta_rows, "theta"),
        nu=parse_rows(nu_rows, "nu"),
    )
