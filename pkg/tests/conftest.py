from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cyclic_covers.curves import standard_curve, validate_curve

# (d, r) pairs used for exhaustive checks.
GRID = [(2, 4), (2, 6), (2, 8), (3, 4), (3, 6), (5, 4), (7, 3)]


@pytest.fixture
def cubic():
    """The genus-2 trigonal anchor curve y^3 = x(x-1)(x+1)^2(x-5/2)^2."""
    return validate_curve(3, [0, 1, -1, Fraction(5, 2)], [1, 1, 2, 2])


@pytest.fixture
def sextic():
    """The genus-2 hyperelliptic anchor curve y^2 = x(x-1)...(x-5)."""
    return validate_curve(2, range(6), [1] * 6)


def grid_curve(d, r):
    if (d, r) == (3, 4):
        return validate_curve(3, [0, 1, -1, Fraction(5, 2)], [1, 1, 2, 2])
    return standard_curve(d, r)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def small_curves(draw, max_vectors=800):
    """Random valid curves with at most ``max_vectors`` hyperplane vectors."""
    d = draw(st.sampled_from([2, 3, 5, 7]))
    r_max = 3
    while d ** r_max <= max_vectors:
        r_max += 1
    r = draw(st.integers(3, r_max))
    if d == 2 and r % 2:
        r += 1 if d ** r <= max_vectors else -1
    points = draw(st.lists(rationals, min_size=r, max_size=r, unique=True))
    head = draw(st.lists(st.integers(1, d - 1), min_size=r - 1, max_size=r - 1))
    last = (-sum(head)) % d
    if last == 0:
        # shift one entry so the balancing exponent is nonzero
        head[0] = head[0] % (d - 1) + 1
        last = (-sum(head)) % d
    return validate_curve(d, points, head + [last])


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion, then assert it."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" -- {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
