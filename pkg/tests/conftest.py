import pytest

from braidnum.poly import T, Y, MultiPoly


@pytest.fixture
def N2():
    """The rank-2 numerator, (1+3y+2y^2) + (2+3y+y^2) t."""
    y, t = MultiPoly.var(Y), MultiPoly.var(T)
    return (1 + 3 * y + 2 * y ** 2) + (2 + 3 * y + y ** 2) * t


# one line per acceptance criterion, shown after the test summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
