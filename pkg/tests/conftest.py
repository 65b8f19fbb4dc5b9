import pytest
from hypothesis import settings, strategies as st

from bbdigraph import BipartiteDigraph

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def digraphs(draw, min_a=1, max_a=5):
    a = draw(st.integers(min_a, max_a))
    rows = st.integers(0, (1 << a) - 1)
    xy = draw(st.lists(rows, min_size=a, max_size=a))
    yx = draw(st.lists(rows, min_size=a, max_size=a))
    return BipartiteDigraph(a, xy, yx)


@pytest.fixture
def k33():
    from bbdigraph.verify.generate import complete

    return complete(3)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
