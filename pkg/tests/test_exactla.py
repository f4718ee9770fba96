"""Tests for exact rational linear algebra and feasibility."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coterie import exactla
from coterie.exactla import (
    EQ,
    GE,
    GT,
    ConeSystem,
    InconsistentSystemError,
    LinearConstraint,
    ResourceCapError,
    SingularMatrixError,
    constraint,
    feasible,
    identity,
    mat_inverse,
    mat_rank,
    primitive,
    solve_linear,
    vec,
)

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=12)
dims = st.integers(min_value=1, max_value=4)


@st.composite
def matrix_and_point(draw):
    n = draw(dims)
    m = draw(st.integers(min_value=1, max_value=4))
    a = tuple(tuple(draw(small_rationals) for _ in range(n)) for _ in range(m))
    x = tuple(draw(small_rationals) for _ in range(n))
    return a, x


@st.composite
def small_system(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    rows = draw(st.integers(min_value=1, max_value=5))
    cons = []
    for _ in range(rows):
        f = tuple(draw(st.integers(min_value=-4, max_value=4)) for _ in range(n))
        rel = draw(st.sampled_from([GT, GE, EQ]))
        bound = draw(st.integers(min_value=-4, max_value=4))
        cons.append(constraint(f, rel, bound))
    return ConeSystem(n, tuple(cons))


class TestSolveLinear:
    def test_identity_system(self):
        """Identity matrix returns b itself with empty kernel."""
        sol = solve_linear(identity(2), vec([3, 5]))
        assert sol.particular == vec([3, 5])
        assert sol.kernel == ()

    def test_symmetric_kernel(self):
        """x - y = 0 has kernel spanned by (1, 1)."""
        sol = solve_linear(((1, -1),), (0,))
        assert sol.particular == vec([0, 0])
        assert sol.kernel == ((1, 1),)

    def test_chain_equalities_give_ray_direction(self):
        """The 2a1=a2, 3a2=2a3, 4a3=3a4 system has the (1/4,1/2,3/4,1) line."""
        a = ((2, -1, 0, 0), (0, 3, -2, 0), (0, 0, 4, -3))
        sol = solve_linear(a, (0, 0, 0))
        assert sol.particular == vec([0, 0, 0, 0])
        assert sol.kernel == ((1, 2, 3, 4),)
        scaled = tuple(Fraction(c, 4) for c in sol.kernel[0])
        assert scaled == vec(["1/4", "1/2", "3/4", 1])

    def test_inconsistent_raises(self):
        with pytest.raises(InconsistentSystemError):
            solve_linear(((1, 1), (1, 1)), (0, 1))

    def test_row_count_mismatch(self):
        with pytest.raises(ValueError):
            solve_linear(((1, 1),), (0, 1))

    @given(ax=matrix_and_point())
    def test_substitution_reproduces_rhs(self, ax):
        """Solving A x = A x0 yields solutions that reproduce the rhs exactly."""
        a, x0 = ax
        b = exactla.mat_vec(a, x0)
        sol = solve_linear(a, b)
        assert exactla.mat_vec(a, sol.particular) == b
        for k in sol.kernel:
            assert exactla.mat_vec(a, vec(k)) == exactla.zeros(len(a))

    @given(ax=matrix_and_point())
    def test_kernel_vectors_primitive(self, ax):
        """Kernel basis vectors are primitive integer vectors."""
        a, x0 = ax
        sol = solve_linear(a, exactla.mat_vec(a, x0))
        for k in sol.kernel:
            assert k == primitive(k)
            assert all(isinstance(c, int) for c in k)


class TestPrimitive:
    def test_clears_and_reduces(self):
        assert primitive(vec(["1/4", "1/2", "3/4", 1])) == (1, 2, 3, 4)

    def test_sign_rule(self):
        assert primitive(vec(["-2/3", "4/3"])) == (1, -2)

    def test_zero_vector(self):
        assert primitive(vec([0, 0])) == (0, 0)

    @given(x=st.lists(small_rationals, min_size=1, max_size=5))
    def test_idempotent_and_parallel(self, x):
        """primitive is idempotent and preserves the rational line."""
        p = primitive(x)
        assert primitive(p) == p
        if any(x):
            i = next(k for k, c in enumerate(x) if c)
            ratio = Fraction(x[i]) / p[i]
            assert all(Fraction(c) == ratio * q for c, q in zip(x, p))


class TestMatrixOps:
    def test_inverse_matches_identity(self):
        m = ((2, -1), (-1, 2))
        inv = mat_inverse(m)
        assert exactla.mat_mul(m, inv) == identity(2)

    def test_singular_raises(self):
        with pytest.raises(SingularMatrixError):
            mat_inverse(((1, 2), (2, 4)))

    def test_rank_examples(self):
        assert mat_rank(((1, 2), (2, 4))) == 1
        assert mat_rank(identity(3)) == 3
        assert mat_rank(((0, 0),)) == 0

    @given(ax=matrix_and_point())
    def test_rank_bounded(self, ax):
        a, _ = ax
        assert 0 <= mat_rank(a) <= min(len(a), len(a[0]))


class TestFeasible:
    def test_open_interval(self):
        """{x > 0, x < 1} is feasible with a witness strictly inside."""
        system = ConeSystem(1, (constraint([1], GT, 0), constraint([-1], GT, -1)))
        res = feasible(system)
        assert res.feasible
        assert 0 < res.witness[0] < 1

    def test_empty_open_interval(self):
        system = ConeSystem(1, (constraint([1], GT, 0), constraint([-1], GT, 0)))
        assert not feasible(system).feasible

    def test_strict_vs_weak_point(self):
        """x >= 0 together with x <= 0 pins x = 0; adding strictness kills it."""
        weak = ConeSystem(1, (constraint([1], GE, 0), constraint([-1], GE, 0)))
        res = feasible(weak)
        assert res.feasible and res.witness == (Fraction(0),)
        strict = ConeSystem(1, (constraint([1], GT, 0), constraint([-1], GE, 0)))
        assert not feasible(strict).feasible

    def test_equalities_are_pivoted(self):
        system = ConeSystem(
            3,
            (
                constraint([1, 1, 0], EQ, 2),
                constraint([0, 1, -1], EQ, 0),
                constraint([0, 0, 1], GT, 0),
                constraint([1, 0, 0], GE, 0),
            ),
        )
        res = feasible(system)
        assert res.feasible
        x = res.witness
        assert x[0] + x[1] == 2 and x[1] == x[2] and x[2] > 0

    def test_unbounded_side_uses_bound_plus_one(self):
        system = ConeSystem(1, (constraint([1], GE, 7),))
        assert feasible(system).witness == (Fraction(8),)

    def test_cap_raises(self):
        cons = []
        for k in range(1, 12):
            cons.append(constraint([1, k, 0], GE, 0))
            cons.append(constraint([-1, 0, k], GE, -k))
        system = ConeSystem(3, tuple(cons))
        with pytest.raises(ResourceCapError):
            feasible(system, max_rows=5)

    @given(system=small_system())
    @settings(max_examples=120)
    def test_witness_satisfies_system(self, system):
        """Any feasible verdict comes with an exactly satisfying witness."""
        res = feasible(system)
        if res.feasible:
            assert all(c.holds(res.witness) for c in system.constraints)

    @given(system=small_system())
    @settings(max_examples=60)
    def test_verdict_is_order_independent(self, system):
        """Eliminating variables in any order gives the same verdict."""
        base = feasible(system).feasible
        for order in itertools.permutations(range(system.dim)):
            assert feasible(system, order=list(order)).feasible is base

    @given(system=small_system())
    @settings(max_examples=60, deadline=None)
    def test_infeasible_confirmed_by_grid(self, system):
        """No rational grid point satisfies an infeasible system."""
        if feasible(system).feasible:
            return
        dens = (1, 2, 3, 4) if system.dim <= 2 else (1, 2)
        values = sorted({Fraction(p, q) for q in dens for p in range(-3 * q, 3 * q + 1)})
        for point in itertools.product(values, repeat=system.dim):
            assert not all(c.holds(point) for c in system.constraints)


class TestConeSystem:
    def test_satisfies_scales_exactly(self):
        system = ConeSystem(2, (constraint([2, -1], GT, 0),))
        assert system.satisfies(vec(["2/3", "1/3"]))
        assert not system.satisfies(vec(["1/6", "1/3"]))

    def test_dimension_checked(self):
        with pytest.raises(ValueError):
            ConeSystem(2, (constraint([1], GT, 0),))
        system = ConeSystem(2, (constraint([1, 0], GT, 0),))
        with pytest.raises(ValueError):
            system.satisfies((1,))

    @given(system=small_system(), point=st.lists(small_rationals, min_size=1, max_size=3))
    @settings(max_examples=80)
    def test_satisfies_matches_direct_evaluation(self, system, point):
        if len(point) != system.dim:
            point = (list(point) * 3)[: system.dim]
        direct = all(c.holds(vec(point)) for c in system.constraints)
        assert system.satisfies(vec(point)) is direct


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
