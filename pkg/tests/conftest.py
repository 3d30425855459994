import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def random_standard_theta(ell: int, rng: random.Random, J=None):
    """A J-standard parameter: nonzero entries of one sign off J, zeros on J."""
    if J is None:
        J = {i for i in range(ell) if rng.random() < 0.4}
        if len(J) == ell:
            J.discard(rng.randrange(ell))
    sign = rng.choice((1, -1))
    theta = tuple(
        Fraction(0) if i in J else sign * Fraction(rng.randint(1, 9), rng.randint(1, 5))
        for i in range(ell)
    )
    return theta, frozenset(J)


@pytest.fixture
def rng():
    return random.Random(20260101)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
