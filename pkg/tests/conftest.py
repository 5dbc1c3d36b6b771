import pytest
from hypothesis import strategies as st

from finitetop import build_topology


@pytest.fixture
def one_open_point():
    """Three points with a single nontrivial open: the smallest space whose
    alpha-refinement gains open sets."""
    return build_topology(3, [0b001])


@pytest.fixture
def sier():
    """Two-point space with one open point."""
    return build_topology(2, [0b01])


@st.composite
def topologies(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=4))
    return build_topology(n, gens)


@st.composite
def topology_and_subset(draw, max_n=4):
    t = draw(topologies(max_n=max_n))
    return t, draw(st.integers(0, (1 << t.n) - 1))
