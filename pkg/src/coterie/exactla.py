"""Exact rational linear algebra and feasibility of mixed linear systems.

Scalars are fractions.Fraction, vectors are tuples of Fractions, matrices
tuples of row tuples; no floating point anywhere. Feasibility of systems
mixing strict/weak inequalities and equalities is decided by
Fourier-Motzkin elimination with strictness tracking over cleared integer
rows, returning an exact rational witness on success.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from ._backend import kernels

GT = ">"
GE = ">="
EQ = "="
_REL_CODE = {GT: kernels.REL_GT, GE: kernels.REL_GE, EQ: kernels.REL_EQ}

DEFAULT_ROW_CAP = 10**6


class InconsistentSystemError(ValueError):
    """Linear equation system with no solution."""


class SingularMatrixError(ValueError):
    """Inversion attempted on a singular matrix."""


class ResourceCapError(RuntimeError):
    """An elimination or enumeration outgrew its configured cap."""


def vec(coords) -> tuple:
    return tuple(Fraction(c) for c in coords)


def mat(rows) -> tuple:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> tuple:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> tuple:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def identity(n: int) -> tuple:
    return tuple(unit(n, i) for i in range(n))


def vec_add(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a, b) -> tuple:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a) -> tuple:
    c = Fraction(c)
    return tuple(c * x for x in a)


def vec_dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def mat_vec(m, v) -> tuple:
    return tuple(vec_dot(row, v) for row in m)


def mat_transpose(m) -> tuple:
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b) -> tuple:
    bt = mat_transpose(b)
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def clear_row(coords) -> tuple:
    """Scale a rational vector by the positive lcm of denominators: integer entries."""
    coords = vec(coords)
    d = 1
    for c in coords:
        d = lcm(d, c.denominator)
    return tuple(int(c * d) for c in coords)


def primitive(coords) -> tuple:
    """Primitive integer representative of a rational direction.

    Clears denominators, divides by the gcd, and makes the first nonzero
    entry positive. The zero vector maps to itself.
    """
    ints = clear_row(coords)
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return ints
    ints = tuple(c // g for c in ints)
    for c in ints:
        if c != 0:
            if c < 0:
                ints = tuple(-x for x in ints)
            break
    return ints


def mat_rank(m) -> int:
    rows = [clear_row(r) for r in m]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return kernels.rank_of(rows)


def mat_inverse(m) -> tuple:
    n = len(m)
    aug = [list(vec(row)) + list(unit(n, i)) for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError(f"singular matrix (rank < {n})")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class LinearSolution:
    """Affine solution set: particular + rational span of kernel basis.

    Kernel basis vectors are primitive integer vectors (denominators
    cleared, gcd 1, first nonzero entry positive).
    """

    particular: tuple
    kernel: tuple


def solve_linear(a, b) -> LinearSolution:
    """Solve a x = b exactly over the rationals.

    Raises InconsistentSystemError when the system has no solution.
    """
    rows = [list(vec(row)) + [Fraction(v)] for row, v in zip(a, b, strict=True)]
    ncols = len(rows[0]) - 1 if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        rows[rank] = [x / p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(rows)):
        if rows[r][ncols] != 0:
            raise InconsistentSystemError("inconsistent linear system")
    particular = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        particular[col] = rows[r][ncols]
    free_cols = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -rows[r][fc]
        kernel.append(primitive(v))
    return LinearSolution(tuple(particular), tuple(kernel))


@dataclass(frozen=True)
class LinearConstraint:
    """functional . x  REL  bound, with REL one of >, >=, =."""

    functional: tuple
    rel: str
    bound: Fraction = Fraction(0)

    def __post_init__(self):
        if self.rel not in _REL_CODE:
            raise ValueError(f"unknown relation {self.rel!r}")
        object.__setattr__(self, "functional", vec(self.functional))
        object.__setattr__(self, "bound", Fraction(self.bound))

    def holds(self, x) -> bool:
        v = vec_dot(self.functional, x)
        if self.rel == GT:
            return v > self.bound
        if self.rel == GE:
            return v >= self.bound
        return v == self.bound

    def cleared(self) -> tuple:
        """Integer form (coeffs, bound, rel) scaled by the positive lcm of denominators."""
        ints = clear_row(tuple(self.functional) + (self.bound,))
        return ints[:-1], ints[-1], self.rel


def constraint(functional, rel, bound=0) -> LinearConstraint:
    return LinearConstraint(vec(functional), rel, Fraction(bound))


@dataclass(frozen=True)
class ConeSystem:
    """H-representation: conjunction of linear constraints in dimension dim."""

    dim: int
    constraints: tuple

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for c in self.constraints:
            if len(c.functional) != self.dim:
                raise ValueError("constraint length does not match system dimension")
        rows = tuple(
            (ints, bound, _REL_CODE[rel]) for ints, bound, rel in (c.cleared() for c in self.constraints)
        )
        object.__setattr__(self, "_rows", rows)

    def satisfies(self, x) -> bool:
        """Exact evaluation at a rational point of length dim."""
        x = vec(x)
        if len(x) != self.dim:
            raise ValueError(f"point has length {len(x)}, system dimension is {self.dim}")
        d = 1
        for c in x:
            d = lcm(d, c.denominator)
        ints = tuple(int(c * d) for c in x)
        rows = self._rows if d == 1 else tuple((f, b * d, r) for f, b, r in self._rows)
        return kernels.eval_rows(rows, ints)


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[tuple]

    def __bool__(self) -> bool:
        return self.feasible


def _initial_rows(system: ConeSystem):
    eq_rows = []
    ineq_rows = []
    for c in system.constraints:
        coeffs, bound, rel = c.cleared()
        g = 0
        for v in coeffs:
            g = gcd(g, v)
        g = gcd(g, bound)
        if g > 1:
            coeffs = tuple(v // g for v in coeffs)
            bound //= g
        if rel == EQ:
            eq_rows.append((coeffs, bound))
        else:
            ineq_rows.append((coeffs, bound, rel == GT))
    return eq_rows, ineq_rows


def _verdict(eq_rows, ineq_rows) -> bool:
    for coeffs, bound in eq_rows:
        if any(coeffs):
            continue
        if bound != 0:
            return False
    for coeffs, bound, strict in ineq_rows:
        if any(coeffs):
            continue
        if strict and not 0 > bound:
            return False
        if not strict and not 0 >= bound:
            return False
    return True


def feasible(system: ConeSystem, *, max_rows: int = DEFAULT_ROW_CAP, order: Optional[Sequence[int]] = None) -> Feasibility:
    """Exact feasibility of a mixed strict/weak/equality system.

    Variables are eliminated one at a time: by substitution when an equality
    mentions the variable, otherwise by a Fourier-Motzkin step (a derived
    inequality is strict iff at least one parent is). On success the witness
    is rebuilt by back-substitution, taking the midpoint of each bounded
    interval and bound +/- 1 on unbounded sides. Raises ResourceCapError if
    an intermediate system exceeds max_rows rows.
    """
    dim = system.dim
    elim_order = list(range(dim - 1, -1, -1)) if order is None else list(order)
    if sorted(elim_order) != list(range(dim)):
        raise ValueError("order must be a permutation of the variable indices")
    eq_rows, ineq_rows = _initial_rows(system)
    steps = []
    for var in elim_order:
        if not _verdict(eq_rows, ineq_rows):
            return Feasibility(False, None)
        piv_idx = next((k for k, row in enumerate(eq_rows) if row[0][var] != 0), None)
        if piv_idx is not None:
            pivot = eq_rows.pop(piv_idx)
            if pivot[0][var] < 0:
                pivot = (tuple(-c for c in pivot[0]), -pivot[1])
            steps.append((var, "eq", pivot))
            p = pivot[0][var]

            def substitute(coeffs, bound):
                c = coeffs[var]
                if c == 0:
                    return coeffs, bound
                coeffs = tuple(p * x - c * y for x, y in zip(coeffs, pivot[0]))
                bound = p * bound - c * pivot[1]
                g = 0
                for v in coeffs:
                    g = gcd(g, v)
                g = gcd(g, bound)
                if g > 1:
                    coeffs = tuple(v // g for v in coeffs)
                    bound //= g
                return coeffs, bound

            eq_rows = [substitute(coeffs, bound) for coeffs, bound in eq_rows]
            ineq_rows = [substitute(coeffs, bound) + (strict,) for coeffs, bound, strict in ineq_rows]
        else:
            steps.append((var, "fm", list(ineq_rows)))
            npos = sum(1 for r in ineq_rows if r[0][var] > 0)
            nneg = sum(1 for r in ineq_rows if r[0][var] < 0)
            nzero = len(ineq_rows) - npos - nneg
            if nzero + npos * nneg > max_rows:
                raise ResourceCapError(
                    f"Fourier-Motzkin blow-up: {nzero + npos * nneg} rows exceeds cap {max_rows}"
                )
            ineq_rows = kernels.fm_step(ineq_rows, var)
    if not _verdict(eq_rows, ineq_rows):
        return Feasibility(False, None)
    witness = [Fraction(0)] * dim
    assigned = []
    for var, kind, payload in reversed(steps):
        if kind == "eq":
            coeffs, bound = payload
            rest = sum((Fraction(coeffs[k]) * witness[k] for k in assigned), Fraction(0))
            witness[var] = (Fraction(bound) - rest) / coeffs[var]
        else:
            # If lo == hi below, both bounds are weak: a strict pair at equal
            # value combines to an unsatisfiable verdict row, caught earlier.
            lo = hi = None
            for coeffs, bound, strict in payload:
                c = coeffs[var]
                if c == 0:
                    continue
                rest = sum((Fraction(coeffs[k]) * witness[k] for k in assigned), Fraction(0))
                value = (Fraction(bound) - rest) / c
                if c > 0:
                    if lo is None or value > lo:
                        lo = value
                else:
                    if hi is None or value < hi:
                        hi = value
            if lo is None and hi is None:
                witness[var] = Fraction(0)
            elif hi is None:
                witness[var] = lo + 1
            elif lo is None:
                witness[var] = hi - 1
            else:
                witness[var] = (lo + hi) / 2
        assigned.append(var)
    witness = tuple(witness)
    for c in system.constraints:
        if not c.holds(witness):
            raise AssertionError("internal error: witness fails its own system")
    return Feasibility(True, witness)
