from fractions import Fraction

import pytest

# rational test set used throughout the grid checks
MU_SET = [Fraction(1), Fraction(4, 3), Fraction(3, 2), Fraction(5, 3),
          Fraction(2), Fraction(7, 3), Fraction(5, 2), Fraction(3)]


def grid(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        for a in range(n + 1):
            yield a, n - a


@pytest.fixture
def mu_set():
    return list(MU_SET)


# acceptance criteria append (label, passed, detail) here
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
