import itertools

import pytest
from hypothesis import settings, strategies as st

from matroid_chow.matroid import GraphicMatroid, LinearMatroid, UniformMatroid

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def small_matroids(draw, max_size=6):
    """Uniform, graphic or small-integer linear matroids on at most ``max_size`` elements."""
    kind = draw(st.sampled_from(["uniform", "graphic", "linear"]))
    if kind == "uniform":
        m = draw(st.integers(1, max_size))
        return UniformMatroid(draw(st.integers(0, m)), m)
    if kind == "graphic":
        pairs = list(itertools.combinations_with_replacement(range(4), 2))
        edges = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_size))
        return GraphicMatroid(edges)
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(1, max_size))
    entries = st.integers(-2, 2)
    return LinearMatroid([[draw(entries) for _ in range(cols)] for _ in range(rows)])


@st.composite
def loopless_matroids(draw, max_size=6):
    M = draw(small_matroids(max_size))
    loops = M.loops()
    if loops:
        M = M.delete(loops)
    if not M.ground:
        return UniformMatroid(1, 1)
    return M


@pytest.fixture
def tmp_matroid(tmp_path):
    def write(text, name="m.json"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return write
