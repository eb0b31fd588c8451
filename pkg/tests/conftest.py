import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PRIMES = (2, 3, 5, 7, 11)


@st.composite
def rats(draw, num=200):
    """Rationals whose denominators factor over small primes."""
    den = 1
    for p in PRIMES:
        den *= p ** draw(st.integers(0, 2))
    return Fraction(draw(st.integers(-num, num)), den)


primes = st.sampled_from(PRIMES)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
