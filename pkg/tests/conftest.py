import pytest

from bmaps.mapstats import CANONICAL, OrientationRule, enumerate_maps

# Canonical plus three seeded rules; every "for any rule" statement is checked on all four.
RULES = (CANONICAL, OrientationRule(1), OrientationRule(2), OrientationRule(3))


def maps_of(n):
    return list(enumerate_maps(n))


def maps_up_to(nmax):
    return [m for n in range(1, nmax + 1) for m in enumerate_maps(n)]


@pytest.fixture(scope="session")
def small_maps():
    return maps_up_to(4)


@pytest.fixture(scope="session")
def maps_five():
    return maps_up_to(5)


# One line per acceptance criterion, filled in by test_acceptance.py.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[num])
