"""Closed-form minimization of tropical "span" objectives.

All problems minimize, over regular vectors x, an objective built from
a square matrix A and optional data p, q (vectors), r (scalar):

    x^- A x                                (plain span)
    x^- A x (+) x^- p (+) q^- x (+) r      (extended span)

subject to none, some, or all of the constraints

    B x (+) g <= x          (precedence / lower fixpoint)
    g <= x <= h             (box bounds)

Each solver returns the exact minimum together with the complete family
of minimizers, parameterized as x = G (x) u over a box of u.  The
minimum formulas combine the spectral radius of A, rational roots of
chain/closure sums of (A, B) squeezed against p, q, g, h, and r.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import (
    DegenerateProblem,
    InfeasibleConstraints,
    NotRegularVector,
    NotSquare,
    ShapeMismatch,
    ZeroSpectralRadius,
)
from .linalg import Matrix, Vector, chain_sums, closure_sums
from .linsolve import SolutionSet
from .semifield import Scalar


class ProblemKind(str, Enum):
    BASIC = "Basic"
    EXTENDED = "ExtendedUnconstrained"
    LINEAR_CONSTRAINED = "LinearConstrained"
    GENERAL = "General"
    BOX_CONSTRAINED = "BoxConstrained"
    FIXPOINT_CONSTRAINED = "FixpointConstrained"


# fields each kind must carry; every other optional field must be absent
_FIELDS = {
    ProblemKind.BASIC: (),
    ProblemKind.EXTENDED: ("p", "q", "r"),
    ProblemKind.LINEAR_CONSTRAINED: ("B", "g"),
    ProblemKind.GENERAL: ("B", "p", "q", "g", "h", "r"),
    ProblemKind.BOX_CONSTRAINED: ("p", "q", "g", "h", "r"),
    ProblemKind.FIXPOINT_CONSTRAINED: ("B", "p", "q", "r"),
}


@dataclass(frozen=True)
class Problem:
    kind: ProblemKind
    A: Matrix
    B: Optional[Matrix] = None
    p: Optional[Vector] = None
    q: Optional[Vector] = None
    g: Optional[Vector] = None
    h: Optional[Vector] = None
    r: Optional[Scalar] = None

    def validate(self) -> None:
        n = self.A._require_square()
        required = _FIELDS[self.kind]
        for name in ("B", "p", "q", "g", "h", "r"):
            value = getattr(self, name)
            if name in required and value is None:
                raise ValueError(f"kind {self.kind.value} needs field {name}")
            if name not in required and value is not None:
                raise ValueError(f"kind {self.kind.value} forbids field {name}")
        if self.B is not None and self.B._require_square() != n:
            raise ShapeMismatch("B order differs from A")
        for name in ("p", "q", "g", "h"):
            vec = getattr(self, name)
            if vec is not None and vec.dim != n:
                raise ShapeMismatch(f"field {name} has dim {vec.dim}, order is {n}")

    @property
    def dim(self) -> int:
        return self.A.n_rows


@dataclass(frozen=True)
class OptResult:
    minimum: Scalar
    solutions: SolutionSet
    canonical: Vector


def objective_value(problem: Problem, x: Vector) -> Scalar:
    """Evaluate the problem's objective at a regular x."""
    if x.dim != problem.dim:
        raise ShapeMismatch(f"x dim {x.dim}, order {problem.dim}")
    if not x.is_regular():
        raise NotRegularVector("objective needs a regular point")
    sf = problem.A.sf
    xc = x.conj()
    value = xc @ (problem.A @ x)
    if problem.kind in (ProblemKind.BASIC, ProblemKind.LINEAR_CONSTRAINED):
        return value
    value = sf.add(value, xc @ problem.p)
    value = sf.add(value, problem.q.conj() @ x)
    return sf.add(value, problem.r)


def _tighten_box(lower: Vector, upper: Vector) -> Vector:
    """Absorb float dust that pushed the upper parameter bound below the
    lower one.  Exact arithmetic never triggers this; the closed forms
    guarantee a nonempty box."""
    sf = lower.sf
    out = []
    widened = False
    for lo, up in zip(lower.entries, upper.entries):
        if sf.leq(lo, up):
            out.append(up)
        elif sf.eq(lo, up):
            out.append(lo)
            widened = True
        else:
            raise AssertionError("parameter box empty beyond tolerance")
    if widened:
        warnings.warn(
            "parameter box widened by eps to absorb float rounding",
            RuntimeWarning,
            stacklevel=3,
        )
        return Vector(tuple(out), sf)
    return upper


def _result(minimum: Scalar, generator: Matrix, lower: Vector,
            upper: Optional[Vector]) -> OptResult:
    if upper is not None:
        upper = _tighten_box(lower, upper)
    sols = SolutionSet(generator=generator, lower=lower, upper=upper,
                       minimum=minimum)
    return OptResult(minimum=minimum, solutions=sols, canonical=sols.canonical())


def minimize_basic(a: Matrix) -> OptResult:
    """min over regular x of x^- A x.

    The minimum is the spectral radius; minimizers are the images of
    the star of the radius-normalized matrix.
    """
    n = a._require_square()
    sf = a.sf
    lam = a.spectral_radius()
    if sf.is_zero(lam):
        raise ZeroSpectralRadius("matrix has no cycle")
    gen = a.scale(sf.inv(lam)).star()
    return _result(lam, gen, Vector.zeros(n, sf), None)


def minimize_extended(a: Matrix, p: Vector, q: Vector, r: Scalar) -> OptResult:
    """min over regular x of x^- A x (+) x^- p (+) q^- x (+) r."""
    n = a._require_square()
    sf = a.sf
    if not q.is_regular():
        raise NotRegularVector("q must be regular")
    if p.dim != n or q.dim != n:
        raise ShapeMismatch("p, q must match the order of A")
    lam = a.spectral_radius()
    if sf.is_zero(lam):
        raise ZeroSpectralRadius("matrix has no cycle")
    qc = q.conj()
    mu = sf.add(lam, r)
    for m, power_m in enumerate(a.powers(n - 1)):
        mu = sf.add(mu, sf.power(qc @ power_m @ p, Fraction(1, m + 2)))
    gen = a.scale(sf.inv(mu)).star()
    lower = p.scale(sf.inv(mu))
    upper = ((qc @ gen).conj()).scale(mu)
    return _result(mu, gen, lower, upper)


def minimize_linear_constrained(a: Matrix, b: Matrix, g: Vector) -> OptResult:
    """min x^- A x subject to B x (+) g <= x."""
    n = a._require_square()
    sf = a.sf
    if b._require_square() != n or g.dim != n:
        raise ShapeMismatch("B, g must match the order of A")
    if not sf.leq_tol(b.trace_sum(), sf.one):
        raise InfeasibleConstraints("Tr(B) <= 1")
    if sf.is_zero(a.spectral_radius()):
        raise ZeroSpectralRadius("matrix has no cycle")
    chains = chain_sums(a, b)
    mu = sf.sum(
        sf.power(chains[k].trace(), Fraction(1, k)) for k in range(1, n + 1)
    )
    gen = (a.scale(sf.inv(mu)) + b).star()
    return _result(mu, gen, g, None)


def _degenerate_gate(sf, lam: Scalar, qp: Scalar, r: Scalar) -> None:
    base = sf.add(lam, sf.power(qp, Fraction(1, 2)))
    base = sf.add(base, r)
    if sf.is_zero(base):
        raise DegenerateProblem(
            "every scale bound is zero: no cycle, q^- p zero, r zero"
        )


def minimize_box_constrained(a: Matrix, p: Vector, q: Vector, g: Vector,
                             h: Vector, r: Scalar) -> OptResult:
    """min of the extended span objective subject to g <= x <= h."""
    n = a._require_square()
    sf = a.sf
    for name, vec in (("p", p), ("q", q), ("g", g), ("h", h)):
        if vec.dim != n:
            raise ShapeMismatch(f"{name} must match the order of A")
    if not q.is_regular() or not h.is_regular():
        raise NotRegularVector("q and h must be regular")
    qc, hc = q.conj(), h.conj()
    if not sf.leq_tol(hc @ g, sf.one):
        raise InfeasibleConstraints("h^- g <= 1")
    lam = a.spectral_radius()
    _degenerate_gate(sf, lam, qc @ p, r)
    pows = a.powers(n - 1)
    theta = sf.add(lam, r)
    for k in range(1, n):
        theta = sf.add(theta, sf.power(hc @ pows[k] @ g, Fraction(1, k)))
    for k in range(n):
        cross = sf.add(qc @ pows[k] @ g, hc @ pows[k] @ p)
        theta = sf.add(theta, sf.power(cross, Fraction(1, k + 1)))
        theta = sf.add(theta, sf.power(qc @ pows[k] @ p, Fraction(1, k + 2)))
    inv_t = sf.inv(theta)
    gen = a.scale(inv_t).star()
    lower = p.scale(inv_t) + g
    upper = ((qc.scale(inv_t) + hc) @ gen).conj()
    return _result(theta, gen, lower, upper)


def minimize_fixpoint_constrained(a: Matrix, b: Matrix, p: Vector, q: Vector,
                                  r: Scalar) -> OptResult:
    """min of the extended span objective subject to B x <= x."""
    n = a._require_square()
    sf = a.sf
    if b._require_square() != n or p.dim != n or q.dim != n:
        raise ShapeMismatch("B, p, q must match the order of A")
    if not q.is_regular():
        raise NotRegularVector("q must be regular")
    if not sf.leq_tol(b.trace_sum(), sf.one):
        raise InfeasibleConstraints("Tr(B) <= 1")
    qc = q.conj()
    _degenerate_gate(sf, a.spectral_radius(), qc @ p, r)
    chains = chain_sums(a, b)
    closures = closure_sums(a, b)
    theta = r
    for k in range(1, n + 1):
        theta = sf.add(theta, sf.power(chains[k].trace(), Fraction(1, k)))
    for k in range(n):
        theta = sf.add(theta, sf.power(qc @ closures[k] @ p, Fraction(1, k + 2)))
    inv_t = sf.inv(theta)
    gen = (a.scale(inv_t) + b).star()
    lower = p.scale(inv_t)
    upper = ((qc @ gen).conj()).scale(theta)
    return _result(theta, gen, lower, upper)


def minimize_general(a: Matrix, b: Matrix, p: Vector, q: Vector, g: Vector,
                     h: Vector, r: Scalar) -> OptResult:
    """min of the extended span objective subject to both constraint
    blocks: B x (+) g <= x <= h.

    The minimum collects five groups of terms: trace roots of the chain
    family, rooted squeezes of the closure family against (h, g),
    (q, g) with (h, p) jointly, (q, p), and the floor r.
    """
    n = a._require_square()
    sf = a.sf
    if b._require_square() != n:
        raise ShapeMismatch("B must match the order of A")
    for name, vec in (("p", p), ("q", q), ("g", g), ("h", h)):
        if vec.dim != n:
            raise ShapeMismatch(f"{name} must match the order of A")
    if not q.is_regular() or not h.is_regular():
        raise NotRegularVector("q and h must be regular")
    if not sf.leq_tol(b.trace_sum(), sf.one):
        raise InfeasibleConstraints("Tr(B) <= 1")
    qc, hc = q.conj(), h.conj()
    if not sf.leq_tol(hc @ b.star() @ g, sf.one):
        raise InfeasibleConstraints("h^- B* g <= 1")
    _degenerate_gate(sf, a.spectral_radius(), qc @ p, r)
    chains = chain_sums(a, b)
    closures = closure_sums(a, b)
    theta = r
    for k in range(1, n + 1):
        theta = sf.add(theta, sf.power(chains[k].trace(), Fraction(1, k)))
    for k in range(1, n):
        theta = sf.add(theta, sf.power(hc @ closures[k] @ g, Fraction(1, k)))
    for k in range(n):
        row = closures[k]
        cross = sf.add(qc @ row @ g, hc @ row @ p)
        theta = sf.add(theta, sf.power(cross, Fraction(1, k + 1)))
        theta = sf.add(theta, sf.power(qc @ row @ p, Fraction(1, k + 2)))
    inv_t = sf.inv(theta)
    gen = (a.scale(inv_t) + b).star()
    lower = p.scale(inv_t) + g
    upper = ((qc.scale(inv_t) + hc) @ gen).conj()
    return _result(theta, gen, lower, upper)


def solve_problem(problem: Problem) -> OptResult:
    """Validate and dispatch to the kind's solver."""
    problem.validate()
    k = problem.kind
    if k is ProblemKind.BASIC:
        return minimize_basic(problem.A)
    if k is ProblemKind.EXTENDED:
        return minimize_extended(problem.A, problem.p, problem.q, problem.r)
    if k is ProblemKind.LINEAR_CONSTRAINED:
        return minimize_linear_constrained(problem.A, problem.B, problem.g)
    if k is ProblemKind.BOX_CONSTRAINED:
        return minimize_box_constrained(
            problem.A, problem.p, problem.q, problem.g, problem.h, problem.r
        )
    if k is ProblemKind.FIXPOINT_CONSTRAINED:
        return minimize_fixpoint_constrained(
            problem.A, problem.B, problem.p, problem.q, problem.r
        )
    return minimize_general(
        problem.A, problem.B, problem.p, problem.q, problem.g, problem.h,
        problem.r,
    )


def _feasible(problem: Problem, x: Vector) -> Optional[str]:
    sf = problem.A.sf
    k = problem.kind
    if k in (ProblemKind.LINEAR_CONSTRAINED, ProblemKind.GENERAL,
             ProblemKind.FIXPOINT_CONSTRAINED):
        bound = problem.B @ x
        if problem.g is not None:
            bound = bound + problem.g
        if not bound.leq_tol(x):
            return "constraint B x (+) g <= x violated"
    if k is ProblemKind.BOX_CONSTRAINED and not problem.g.leq_tol(x):
        return "constraint g <= x violated"
    if k in (ProblemKind.GENERAL, ProblemKind.BOX_CONSTRAINED):
        if not x.leq_tol(problem.h):
            return "constraint x <= h violated"
    return None


def verify_solution(problem: Problem, result: OptResult,
                    x: Vector) -> tuple[bool, str]:
    """Check a claimed minimizer: regular, feasible, attains the
    minimum, and lies in the returned family.  Returns (ok, reason);
    reason is empty on success."""
    if x.dim != problem.dim:
        return False, "dimension mismatch"
    if not x.is_regular():
        return False, "vector is not regular"
    reason = _feasible(problem, x)
    if reason is not None:
        return False, reason
    sf = problem.A.sf
    if not sf.eq(objective_value(problem, x), result.minimum):
        return False, "objective differs from the minimum"
    if not result.solutions.contains(x):
        return False, "not in the solution family"
    return True, ""
