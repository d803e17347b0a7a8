import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from evoalg.scalars import ZERO, rad_canonicalize  # noqa: E402


def random_monomial(rng: random.Random, max_radicand=100, max_root=6):
    num = rng.randint(-9, 9) or 1
    coef = Fraction(num, rng.randint(1, 6))
    return rad_canonicalize(coef, rng.randint(1, max_radicand), rng.randint(1, max_root))


def random_scalar(rng: random.Random, max_terms=3):
    x = ZERO
    for _ in range(rng.randint(1, max_terms)):
        x = x + random_monomial(rng)
    return x


def zero_candidate(rng: random.Random):
    """Half exactly-zero values reached by different canonical routes, half
    random differences."""
    a, b = rng.randint(1, 100), rng.randint(1, 100)
    k = rng.randint(1, 6)
    if rng.random() < 0.5:
        x = rad_canonicalize(1, a, k) * rad_canonicalize(1, b, k) - rad_canonicalize(1, a * b, k)
        return x * random_scalar(rng)
    return random_monomial(rng) * random_scalar(rng) - random_scalar(rng)


def pytest_terminal_summary(terminalreporter):
    from report import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])


@pytest.fixture
def rng():
    return random.Random(20240611)
