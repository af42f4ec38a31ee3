import pytest
from hypothesis import strategies as st

from triplyeven.gf2 import LinearCode


@st.composite
def codes(draw, min_length=1, max_length=14, max_rows=6):
    n = draw(st.integers(min_length, max_length))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_rows))
    return LinearCode(n, rows)


@pytest.fixture(scope="session")
def desd24():
    from triplyeven.data import load_desd24

    return load_desd24()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for criterion in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[criterion])
