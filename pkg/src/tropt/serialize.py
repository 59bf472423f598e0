"""JSON input and output for problems, schedules and results.

Scalar conventions, both directions:

  integers        JSON numbers
  rationals       strings "num/den" (any Fraction string also parses)
  minus infinity  the string "-inf", or null inside matrices
  floats          JSON numbers (approximate mode)

Exact mode parses JSON floats through Fraction so a value like 2.5 is
read from its decimal spelling, not from a binary double.  Matrices
travel as {"rows": r, "cols": c, "data": [[..]]}; a bare list of rows
is accepted on input.  Vectors are plain arrays.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Optional

from .linalg import Matrix, RowVector, Vector
from .linsolve import SolutionSet
from .optimize import OptResult, Problem, ProblemKind
from .schedule import ScheduleResult, ScheduleSpec
from .semifield import MAXPLUS, Scalar, Semifield


def loads(text: str, exact: bool = True):
    if exact:
        return json.loads(text, parse_float=Fraction)
    return json.loads(text)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def parse_scalar(value, sf: Semifield = MAXPLUS, exact: bool = True) -> Scalar:
    if value is None:
        return sf.zero
    if isinstance(value, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        frac = value
    elif isinstance(value, float):
        if math.isinf(value):
            if value == sf.zero:
                return sf.zero
            raise ValueError("infinite value outside the carrier")
        if not exact:
            return value
        frac = Fraction(repr(value))
    elif isinstance(value, str):
        text = value.strip()
        if text == "-inf":
            if sf.zero == float("-inf"):
                return sf.zero
            raise ValueError("-inf outside the carrier")
        if text in ("inf", "+inf"):
            if sf.zero == float("inf"):
                return sf.zero
            raise ValueError("+inf outside the carrier")
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse scalar {value!r}") from exc
    else:
        raise ValueError(f"cannot parse scalar {value!r}")
    if not exact:
        return float(frac)
    return int(frac) if frac.denominator == 1 else frac


def encode_scalar(value: Scalar):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float) and math.isinf(value):
        return "-inf" if value < 0 else "inf"
    return value


def parse_matrix(obj, sf: Semifield = MAXPLUS, exact: bool = True) -> Matrix:
    declared_rows = declared_cols = None
    if isinstance(obj, dict):
        if "data" not in obj:
            raise ValueError("matrix object needs a 'data' field")
        data = obj["data"]
        declared_rows = obj.get("rows")
        declared_cols = obj.get("cols")
    else:
        data = obj
    if (
        not isinstance(data, list)
        or not data
        or not all(isinstance(row, list) for row in data)
    ):
        raise ValueError("matrix data must be a non-empty list of rows")
    width = len(data[0])
    if width == 0 or any(len(row) != width for row in data):
        raise ValueError("matrix rows must all have the same positive length")
    if declared_rows is not None and declared_rows != len(data):
        raise ValueError("declared row count does not match the data")
    if declared_cols is not None and declared_cols != width:
        raise ValueError("declared column count does not match the data")
    return Matrix(
        tuple(tuple(parse_scalar(v, sf, exact) for v in row) for row in data),
        sf,
    )


def encode_matrix(m: Matrix) -> dict:
    return {
        "rows": m.n_rows,
        "cols": m.n_cols,
        "data": [[encode_scalar(v) for v in row] for row in m.rows],
    }


def parse_vector(obj, sf: Semifield = MAXPLUS, exact: bool = True) -> Vector:
    if not isinstance(obj, list) or not obj:
        raise ValueError("vector must be a non-empty array")
    return Vector(tuple(parse_scalar(v, sf, exact) for v in obj), sf)


def encode_vector(v) -> list:
    return [encode_scalar(x) for x in v.entries]


_PROBLEM_KEYS = {"kind", "A", "B", "p", "q", "g", "h", "r"}


def parse_problem(obj, sf: Semifield = MAXPLUS, exact: bool = True) -> Problem:
    if not isinstance(obj, dict):
        raise ValueError("problem must be a JSON object")
    unknown = set(obj) - _PROBLEM_KEYS
    if unknown:
        raise ValueError(f"unknown problem fields: {sorted(unknown)}")
    if "kind" not in obj:
        raise ValueError("problem needs a 'kind'")
    try:
        kind = ProblemKind(obj["kind"])
    except ValueError:
        names = ", ".join(k.value for k in ProblemKind)
        raise ValueError(
            f"unknown kind {obj['kind']!r}; expected one of: {names}"
        ) from None
    if obj.get("A") is None:
        raise ValueError("problem needs matrix 'A'")

    def mat(key) -> Optional[Matrix]:
        raw = obj.get(key)
        return None if raw is None else parse_matrix(raw, sf, exact)

    def vec(key) -> Optional[Vector]:
        raw = obj.get(key)
        return None if raw is None else parse_vector(raw, sf, exact)

    r = None
    if obj.get("r") is not None:
        r = parse_scalar(obj["r"], sf, exact)
    return Problem(
        kind=kind,
        A=parse_matrix(obj["A"], sf, exact),
        B=mat("B"),
        p=vec("p"),
        q=vec("q"),
        g=vec("g"),
        h=vec("h"),
        r=r,
    )


def encode_problem(problem: Problem) -> dict:
    out: dict[str, Any] = {"kind": problem.kind.value, "A": encode_matrix(problem.A)}
    if problem.B is not None:
        out["B"] = encode_matrix(problem.B)
    for key in ("p", "q", "g", "h"):
        v = getattr(problem, key)
        if v is not None:
            out[key] = encode_vector(v)
    if problem.r is not None:
        out["r"] = encode_scalar(problem.r)
    return out


_SCHEDULE_KEYS = {
    "activities",
    "startFinish",
    "startStart",
    "earliestStart",
    "latestStart",
    "windowLower",
    "windowUpper",
}


def parse_schedule(obj, sf: Semifield = MAXPLUS, exact: bool = True) -> ScheduleSpec:
    """Read a schedule.  startStart defaults to no precedence lags and
    earliestStart to no release times; null entries inside matrices mean
    an absent lag."""
    if not isinstance(obj, dict):
        raise ValueError("schedule must be a JSON object")
    unknown = set(obj) - _SCHEDULE_KEYS
    if unknown:
        raise ValueError(f"unknown schedule fields: {sorted(unknown)}")
    for required in ("startFinish", "latestStart", "windowLower", "windowUpper"):
        if obj.get(required) is None:
            raise ValueError(f"schedule needs '{required}'")
    a = parse_matrix(obj["startFinish"], sf, exact)
    n = a.n_rows
    if obj.get("startStart") is not None:
        b = parse_matrix(obj["startStart"], sf, exact)
    else:
        b = Matrix.zeros(n, n, sf)
    if obj.get("earliestStart") is not None:
        g = parse_vector(obj["earliestStart"], sf, exact)
    else:
        g = Vector.zeros(n, sf)
    names = obj.get("activities")
    if names is not None:
        if not (
            isinstance(names, list) and all(isinstance(s, str) for s in names)
        ):
            raise ValueError("activities must be an array of names")
        names = tuple(names)
    return ScheduleSpec(
        start_finish=a,
        start_start=b,
        earliest_start=g,
        latest_start=parse_vector(obj["latestStart"], sf, exact),
        window_lower=parse_vector(obj["windowLower"], sf, exact),
        window_upper=parse_vector(obj["windowUpper"], sf, exact),
        activities=names,
    )


def encode_solutions(s: SolutionSet) -> dict:
    out = {
        "generator": encode_matrix(s.generator),
        "lowerU": encode_vector(s.lower),
    }
    if s.upper is not None:
        out["upperU"] = encode_vector(s.upper)
    return out


def encode_opt_result(res: OptResult) -> dict:
    return {
        "minimum": encode_scalar(res.minimum),
        "canonical": encode_vector(res.canonical),
        "solutions": encode_solutions(res.solutions),
    }


def encode_schedule_result(res: ScheduleResult, collapse=None) -> dict:
    out = {
        "theta": encode_scalar(res.theta),
        "initiation": encode_vector(res.initiation),
        "completion": encode_vector(res.completion),
        "adjustedStart": encode_vector(res.adjusted_start),
        "adjustedFinish": encode_vector(res.adjusted_finish),
        "flowTimes": [encode_scalar(v) for v in res.flow_times],
        "activities": list(res.activities),
        "solutions": encode_solutions(res.solutions),
        "collapse": None,
    }
    if collapse is not None:
        direction, (low, high) = collapse
        out["collapse"] = {
            "direction": encode_vector(direction),
            "interval": [
                encode_scalar(low),
                None if high is None else encode_scalar(high),
            ],
        }
    return out


def encode_value(v):
    """Encode nested intermediate structures: matrices, vectors,
    dictionaries, sequences and scalars."""
    if isinstance(v, Matrix):
        return encode_matrix(v)
    if isinstance(v, (Vector, RowVector)):
        return encode_vector(v)
    if isinstance(v, dict):
        return {k: encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    return encode_scalar(v)
