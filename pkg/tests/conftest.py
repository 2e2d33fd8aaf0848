import pytest
from hypothesis import settings, strategies as st

from pumpkinvds.digraph import Digraph

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def rooted_digraphs(draw, min_n=2, max_n=7):
    g = draw(digraphs(min_n=max(min_n, 2), max_n=max_n))
    s = draw(st.integers(0, len(g) - 1))
    t = draw(st.integers(0, len(g) - 2))
    if t >= s:
        t += 1
    return g, s, t


@pytest.fixture
def path3():
    return Digraph.from_edges(3, [(0, 1), (1, 2)])
