import random

import pytest
from hypothesis import strategies as st

from quandlebounds.braid import BraidWord

PRIMES_SMALL = [3, 5, 7]


def words(max_degree=4, max_len=8, min_degree=2):
    """Strategy producing random BraidWords."""

    @st.composite
    def build(draw):
        m = draw(st.integers(min_degree, max_degree))
        letters = draw(
            st.lists(st.tuples(st.integers(1, m - 1), st.sampled_from((1, -1))), max_size=max_len)
        )
        return BraidWord(m, tuple(letters))

    return build()


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
