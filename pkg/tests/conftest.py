import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

import _frozen as frozen
from tropt import Matrix, Problem, ProblemKind, ScheduleSpec, Vector

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def project_spec() -> ScheduleSpec:
    """The bundled three-activity project, built in code."""
    return ScheduleSpec(
        start_finish=Matrix(frozen.A_ROWS),
        start_start=Matrix(frozen.B_ROWS),
        earliest_start=Vector(frozen.G),
        latest_start=Vector(frozen.H),
        window_lower=Vector(frozen.Q),
        window_upper=Vector(frozen.P),
        activities=frozen.ACTIVITIES,
    )


@pytest.fixture
def general_problem() -> Problem:
    """The same project reduced to the general span form."""
    return Problem(
        kind=ProblemKind.GENERAL,
        A=Matrix(frozen.A_ROWS),
        B=Matrix(frozen.B_ROWS),
        p=Vector(frozen.P),
        q=Vector(frozen.REDUCED_Q),
        g=Vector(frozen.G),
        h=Vector(frozen.H),
        r=frozen.REDUCED_R,
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
