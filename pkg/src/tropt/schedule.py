"""Minimax flow-time project scheduling.

Activities i = 1..n start at x_i (the decision) and finish at
y_i = max_j (a_ij + x_j): activity i must run for a_ij after activity j
starts (start-finish lags A, at least one finite lag per column).
Additional data:

  start-start lags B:   x_i >= max_j (b_ij + x_j)
  start window [g, h]:  g <= x <= h
  flow window  [q, p]:  the turnaround measured for activity i starts
                        at min(x_i, q_i) and ends at max(y_i, p_i)

The objective is the largest flow time max_i (t_i - s_i) where
s = min(x, q) and t = max(y, p); the solver returns its exact minimum
theta and every optimal start vector, parameterized as x = G (x) u.

Algebraically the objective expands to
x^- A x (+) q^- A x (+) x^- p (+) q^- p over the max-plus semifield,
a span problem whose q-vector is replaced by (q^- A)^- and whose floor
r is q^- p; theta then collects rooted squeezes of the chain and
closure families of (A, B) against p, q, g, h.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InfeasibleSchedule, SpecValidation
from .linalg import Matrix, RowVector, Vector, chain_sums, closure_sums
from .linsolve import SolutionSet
from .optimize import OptResult, Problem, ProblemKind, _result
from .semifield import Scalar


@dataclass(frozen=True)
class ScheduleSpec:
    start_finish: Matrix
    start_start: Matrix
    earliest_start: Vector
    latest_start: Vector
    window_lower: Vector
    window_upper: Vector
    activities: Optional[tuple[str, ...]] = None

    @property
    def dim(self) -> int:
        return self.start_finish.n_rows

    def names(self) -> tuple[str, ...]:
        if self.activities is not None:
            return self.activities
        return tuple(f"a{i + 1}" for i in range(self.dim))

    def validate(self) -> None:
        problems = []
        a = self.start_finish
        if not a.is_square or a.n_rows < 1:
            problems.append("start-finish lag matrix must be square, order >= 1")
            raise SpecValidation(problems)
        n = a.n_rows
        if not (self.start_start.is_square and self.start_start.n_rows == n):
            problems.append("start-start lag matrix must be square of the same order")
        for name, vec in (
            ("earliestStart", self.earliest_start),
            ("latestStart", self.latest_start),
            ("windowLower", self.window_lower),
            ("windowUpper", self.window_upper),
        ):
            if vec.dim != n:
                problems.append(f"{name} must have one entry per activity")
        if not a.is_column_regular():
            problems.append(
                "start-finish lags need a finite entry in every column"
            )
        for name, vec in (
            ("latestStart", self.latest_start),
            ("windowLower", self.window_lower),
            ("windowUpper", self.window_upper),
        ):
            if vec.dim == n and not vec.is_regular():
                problems.append(f"{name} must be finite everywhere")
        if self.activities is not None and len(self.activities) != n:
            problems.append("activity name list must match the order")
        if problems:
            raise SpecValidation(problems)


@dataclass(frozen=True)
class ScheduleResult:
    theta: Scalar
    initiation: Vector
    completion: Vector
    adjusted_start: Vector
    adjusted_finish: Vector
    flow_times: tuple[Scalar, ...]
    solutions: SolutionSet
    activities: tuple[str, ...]


def build_problem(spec: ScheduleSpec) -> Problem:
    """Rewrite the schedule as a general span problem.

    The flow-time objective absorbs A into the window floor: the
    q-vector becomes (q^- A)^- and the constant floor is q^- p.
    """
    spec.validate()
    a = spec.start_finish
    qc = spec.window_lower.conj()
    return Problem(
        kind=ProblemKind.GENERAL,
        A=a,
        B=spec.start_start,
        p=spec.window_upper,
        q=(qc @ a).conj(),
        g=spec.earliest_start,
        h=spec.latest_start,
        r=qc @ spec.window_upper,
    )


def _theta_terms(spec: ScheduleSpec) -> tuple[Scalar, dict]:
    """Exact minimum of the largest flow time, with every intermediate
    quantity the computation touches, keyed for introspection."""
    a, b = spec.start_finish, spec.start_start
    sf = a.sf
    n = a.n_rows
    g, h = spec.earliest_start, spec.latest_start
    p, q = spec.window_upper, spec.window_lower
    qc, hc = q.conj(), h.conj()

    bstar = b.star()
    chains = chain_sums(a, b)
    closures = closure_sums(a, b)
    inter: dict = {
        "A_pow": {str(k): a.power(k) for k in range(2, n + 1)},
        "B_pow": {str(k): b.power(k) for k in range(2, n + 1)},
        "B_star": bstar,
        "trace_sum_B": b.trace_sum(),
        "h_Bstar_g": hc @ bstar @ g,
        "chain_sums": list(chains),
        "closure_sums": list(closures),
    }

    trace_roots = sf.sum(
        sf.power(chains[k].trace(), Fraction(1, k)) for k in range(1, n + 1)
    )
    h_closure_g = {str(k): hc @ closures[k] @ g for k in range(1, n)}
    q_chain_g = {str(k): qc @ chains[k] @ g for k in range(1, n + 1)}
    h_closure_p = {str(k): hc @ closures[k] @ p for k in range(n)}
    q_chain_p = {str(k): qc @ chains[k] @ p for k in range(n + 1)}
    sums = {
        "sum_trace_roots": trace_roots,
        "sum_h_closure_g": sf.sum(
            sf.power(v, Fraction(1, int(k))) for k, v in h_closure_g.items()
        ),
        "sum_q_chain_g": sf.sum(
            sf.power(v, Fraction(1, int(k))) for k, v in q_chain_g.items()
        ),
        "sum_h_closure_p": sf.sum(
            sf.power(v, Fraction(1, int(k) + 1)) for k, v in h_closure_p.items()
        ),
        "sum_q_chain_p": sf.sum(
            sf.power(v, Fraction(1, int(k) + 1)) for k, v in q_chain_p.items()
        ),
    }
    theta = sf.sum(sums.values())
    inter.update(
        h_closure_g=h_closure_g,
        q_chain_g=q_chain_g,
        h_closure_p=h_closure_p,
        q_chain_p=q_chain_p,
        **sums,
    )
    inter["theta"] = theta
    return theta, inter


def solve_schedule_detailed(spec: ScheduleSpec) -> tuple[ScheduleResult, dict]:
    """Solve and also return the intermediate quantities by name."""
    spec.validate()
    a, b = spec.start_finish, spec.start_start
    sf = a.sf
    g, h = spec.earliest_start, spec.latest_start
    p, q = spec.window_upper, spec.window_lower

    if not sf.leq_tol(b.trace_sum(), sf.one):
        raise InfeasibleSchedule("Tr(B) <= 1")
    if not sf.leq_tol(h.conj() @ b.star() @ g, sf.one):
        raise InfeasibleSchedule("h^- B* g <= 1")

    theta, inter = _theta_terms(spec)
    inv_t = sf.inv(theta)
    scaled = a.scale(inv_t) + b
    gen = scaled.star()
    lower = p.scale(inv_t) + g
    w = (q.conj() @ a).scale(inv_t) + h.conj()
    upper = (w @ gen).conj()
    inter["scaled_sum"] = scaled
    inter["scaled_sum_pow"] = {
        str(k): scaled.power(k) for k in range(2, a.n_rows)
    }
    inter["generator"] = gen
    inter["lower_u"] = lower
    inter["upper_u"] = upper

    opt = _result(theta, gen, lower, upper)
    x = opt.canonical
    y = a @ x
    s = x.meet(q)
    t = y + p
    flows = tuple(
        sf.mul(ti, sf.inv(si)) for ti, si in zip(t.entries, s.entries)
    )
    result = ScheduleResult(
        theta=theta,
        initiation=x,
        completion=y,
        adjusted_start=s,
        adjusted_finish=t,
        flow_times=flows,
        solutions=opt.solutions,
        activities=spec.names(),
    )
    return result, inter


def solve_schedule(spec: ScheduleSpec) -> ScheduleResult:
    """Minimize the largest flow time; exact minimum and all optima."""
    return solve_schedule_detailed(spec)[0]


def collapse_solution_line(solutions: SolutionSet) -> Optional[
    tuple[Vector, tuple[Scalar, Optional[Scalar]]]
]:
    """Collapse a rank-one solution family to a line segment.

    When every column of the generator is proportional to the last one,
    each solution is direction (x) v for a scalar v; returns the
    direction (the last generator column) and the closed v-interval the
    family sweeps.  None when the columns do not collapse.  The upper
    endpoint is None for an unbounded family.
    """
    gen = solutions.generator
    sf = gen.sf
    n = gen.n_rows
    last = n - 1
    for i in range(n):
        for j in range(n):
            if not sf.eq(
                gen.rows[i][j], sf.mul(gen.rows[i][last], gen.rows[last][j])
            ):
                return None
    direction = gen.column(last)
    weights = RowVector(gen.rows[last], sf)
    lo = weights @ solutions.lower
    hi = weights @ solutions.upper if solutions.upper is not None else None
    return direction, (lo, hi)
