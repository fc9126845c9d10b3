import pytest

import afsimplex as af

# Five-constraint walkthrough instance: infeasible at the origin, feasible
# region unbounded upward, so the full solve ends UNBOUNDED.
WALK_TEXT = """\
max: 3 x1 + 5 x2;
c1: x1 <= 4;
c2: x2 >= 6;
c3: 3x1 + 2x2 >= 18;
c4: x1 + x2 >= 8;
c5: 5x1 + 4x2 >= 32;
"""

# Empty strip: x1 <= 1 and x1 >= 2 cannot both hold.
STRIP_TEXT = """\
max: x1;
c1: x1 <= 1;
c2: x1 >= 2;
"""

# Classic degenerate instance that cycles under Dantzig entering with
# smallest-label leaving ties.
CYCLER_TEXT = """\
max: 3/4 x1 - 150 x2 + 1/50 x3 - 6 x4;
r1: 1/4 x1 - 60 x2 - 1/25 x3 + 9 x4 <= 0;
r2: 1/2 x1 - 90 x2 - 1/50 x3 + 3 x4 <= 0;
r3: x3 <= 1;
"""


@pytest.fixture(scope="session")
def walk_problem():
    return af.parse_lp(WALK_TEXT)


@pytest.fixture(scope="session")
def walk_sp(walk_problem):
    return af.standardize(walk_problem)


@pytest.fixture(scope="session")
def strip_sp():
    return af.standardize(af.parse_lp(STRIP_TEXT))


@pytest.fixture(scope="session")
def cycler_sp():
    return af.standardize(af.parse_lp(CYCLER_TEXT))


def problem_from(text: str) -> af.StandardProblem:
    return af.standardize(af.parse_lp(text))
