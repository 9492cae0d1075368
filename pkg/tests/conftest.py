from fractions import Fraction as F

import pytest

from selberg_moments.exact_arith import Poly

GOLDEN_COEFFS = [
    F(23, 5437500),
    F(-23, 65250),
    F(3197, 261000),
    F(-8993, 56550),
    F(2117449, 2035800),
    F(-793093, 203580),
    F(601937, 67860),
    F(-4384, 351),
    F(7457, 702),
    F(-5),
    F(1),
]


@pytest.fixture
def golden_poly():
    """n=5, tau=5, a=b=2, mu=2 reference polynomial, ascending coefficients."""
    return Poly(GOLDEN_COEFFS)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record a one-line PASS/FAIL verdict, then assert it."""

    def report(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
