import random
from fractions import Fraction

import pytest

import _frozen as frozen
from tropt import (
    GridTooLarge,
    Matrix,
    NoFeasiblePoint,
    Problem,
    ProblemKind,
    ScheduleSpec,
    TooLarge,
    Vector,
)
from tropt.oracle import (
    GridSpec,
    critical_nodes,
    default_step,
    enum_chain_sum,
    enum_closure_sum,
    enum_cumulative_sum,
    enum_cumulative_trace,
    grid_minimize,
    grid_minimize_schedule,
    max_cycle_mean,
    sample_problem,
    sample_schedule,
)

NEG = float("-inf")


class TestGridSpec:
    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            GridSpec(Vector((0, 0)), Vector((1, 1, 1)), Fraction(1))

    def test_corners_must_be_finite(self):
        with pytest.raises(ValueError):
            GridSpec(Vector((NEG, 0)), Vector((1, 1)), Fraction(1))

    def test_step_must_be_positive(self):
        with pytest.raises(ValueError):
            GridSpec(Vector((0, 0)), Vector((1, 1)), Fraction(0))

    def test_corners_must_be_ordered(self):
        with pytest.raises(ValueError):
            GridSpec(Vector((2, 0)), Vector((1, 1)), Fraction(1))


class TestGridMinimize:
    def test_analytic_one_dimensional_minimum(self):
        # max(0, 2 - x, x) over [-3, 3] dips to 1 at x = 1.
        prob = Problem(
            ProblemKind.BOX_CONSTRAINED,
            A=Matrix(((0,),)),
            p=Vector((2,)),
            q=Vector((0,)),
            g=Vector((-3,)),
            h=Vector((3,)),
            r=NEG,
        )
        best, arg = grid_minimize(
            prob, GridSpec(Vector((-3,)), Vector((3,)), Fraction(1, 2))
        )
        assert best == 1
        assert arg.entries == (1,)

    def test_span_is_translation_invariant(self):
        prob = Problem(ProblemKind.BASIC, A=Matrix(((2,),)))
        best, _ = grid_minimize(
            prob, GridSpec(Vector((-1,)), Vector((1,)), Fraction(1))
        )
        assert best == 2

    def test_rational_data_is_scanned_exactly(self):
        prob = Problem(ProblemKind.BASIC, A=Matrix(((Fraction(1, 2),),)))
        best, _ = grid_minimize(
            prob, GridSpec(Vector((0,)), Vector((1,)), Fraction(1, 4))
        )
        assert best == Fraction(1, 2)

    def test_constraints_filter_points(self):
        # Fixpoint constraint 1 (*) x2 <= x1 cuts the unconstrained dip.
        prob = Problem(
            ProblemKind.FIXPOINT_CONSTRAINED,
            A=Matrix(((NEG, 0), (0, NEG))),
            B=Matrix(((NEG, 1), (NEG, NEG))),
            p=Vector((0, 0)),
            q=Vector((0, 0)),
            r=NEG,
        )
        best, arg = grid_minimize(
            prob, GridSpec(Vector((-2, -2)), Vector((2, 2)), Fraction(1))
        )
        sf = prob.A.sf
        assert arg.entries[0] >= arg.entries[1] + 1
        # every reported value is reproducible by hand at the argmin
        x1, x2 = arg.entries
        span = max(x2 - x1, x1 - x2)
        extra = max(-x1, -x2, x1, x2)
        assert best == max(span, extra)

    def test_no_feasible_point(self):
        prob = Problem(
            ProblemKind.BOX_CONSTRAINED,
            A=Matrix(((0,),)),
            p=Vector((0,)),
            q=Vector((0,)),
            g=Vector((5,)),
            h=Vector((0,)),
            r=NEG,
        )
        with pytest.raises(NoFeasiblePoint):
            grid_minimize(
                prob, GridSpec(Vector((0,)), Vector((5,)), Fraction(1))
            )

    def test_budget_guard(self):
        prob = Problem(ProblemKind.BASIC, A=Matrix(frozen.A_ROWS))
        with pytest.raises(GridTooLarge):
            grid_minimize(
                prob,
                GridSpec(
                    Vector((0, 0, 0)),
                    Vector((50, 50, 50)),
                    Fraction(1, 100),
                ),
            )

    def test_exact_scalars_required(self):
        prob = Problem(ProblemKind.BASIC, A=Matrix(((0.5,),)))
        with pytest.raises(TypeError):
            grid_minimize(
                prob, GridSpec(Vector((0,)), Vector((1,)), Fraction(1))
            )


class TestGridMinimizeSchedule:
    def test_single_activity(self):
        spec = ScheduleSpec(
            start_finish=Matrix(((5,),)),
            start_start=Matrix(((NEG,),)),
            earliest_start=Vector((0,)),
            latest_start=Vector((10,)),
            window_lower=Vector((0,)),
            window_upper=Vector((6,)),
        )
        best, arg = grid_minimize_schedule(
            spec, GridSpec(Vector((-1,)), Vector((2,)), Fraction(1))
        )
        assert best == 6
        assert arg.entries == (0,)

    def test_project_fixture(self, project_spec):
        best, arg = grid_minimize_schedule(
            project_spec,
            GridSpec(Vector((0, 0, 0)), Vector((3, 3, 3)), default_step(3)),
        )
        assert best == frozen.THETA
        assert arg.entries == frozen.X_CANONICAL


class TestDefaultStep:
    def test_divides_all_root_denominators(self):
        assert default_step(2) == Fraction(1, 6)
        assert default_step(3) == Fraction(1, 12)
        assert default_step(4) == Fraction(1, 60)


class TestCycleEnumeration:
    def test_frozen_spectral_radius(self):
        assert max_cycle_mean(Matrix(frozen.A_ROWS)) == frozen.SPECTRAL_RADIUS_A
        assert critical_nodes(Matrix(frozen.A_ROWS)) == frozen.CRITICAL_NODES_A

    def test_precedence_matrix_cycles(self):
        b = Matrix(frozen.B_ROWS)
        assert max_cycle_mean(b) == 0
        assert critical_nodes(b) == frozenset({0, 1, 2})

    def test_acyclic(self):
        m = Matrix(((NEG, 3), (NEG, NEG)))
        assert max_cycle_mean(m) == NEG
        assert critical_nodes(m) == frozenset()

    def test_order_guard(self):
        big = Matrix.zeros(9, 9)
        with pytest.raises(TooLarge):
            max_cycle_mean(big)


class TestCompositionEnumeration:
    def test_zero_b_reduces_to_powers(self):
        a = Matrix(frozen.A_ROWS)
        z = Matrix.zeros(3, 3)
        for k in range(4):
            assert enum_chain_sum(a, z, k) == a.power(k)
        for k in range(3):
            assert enum_closure_sum(a, z, k) == a.power(k)

    def test_frozen_families(self):
        a, b = Matrix(frozen.A_ROWS), Matrix(frozen.B_ROWS)
        assert enum_chain_sum(a, b, 1).rows == frozen.CHAIN_1
        assert enum_chain_sum(a, b, 2).rows == frozen.CHAIN_2
        assert enum_closure_sum(a, b, 0).rows == frozen.B_STAR
        assert enum_closure_sum(a, b, 1).rows == frozen.CLOSURE_1

    def test_cumulative_sum_small_case(self):
        a = Matrix(((1, NEG), (NEG, NEG)))
        b = Matrix(((NEG, 0), (0, NEG)))
        s = a + b
        lhs = s + s @ s
        assert enum_cumulative_sum(a, b, 2) == lhs

    def test_cumulative_trace_small_case(self):
        a = Matrix(((1, NEG), (NEG, NEG)))
        b = Matrix(((NEG, 0), (0, NEG)))
        s = a + b
        sf = a.sf
        expected = sf.add(s.trace(), (s @ s).trace())
        assert sf.eq(enum_cumulative_trace(a, b, 2), expected)

    def test_order_guard(self):
        big = Matrix.zeros(7, 7)
        with pytest.raises(TooLarge):
            enum_chain_sum(big, big, 1)


class TestSamplers:
    def test_problems_validate(self):
        rng = random.Random(1)
        for kind in ProblemKind:
            for _ in range(20):
                sample_problem(rng, kind).validate()

    def test_schedules_validate(self):
        rng = random.Random(2)
        for _ in range(40):
            sample_schedule(rng).validate()
