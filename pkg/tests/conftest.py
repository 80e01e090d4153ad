import sys
from pathlib import Path

from hypothesis import strategies as st

from nclgraph import Graph, graph_from_index

sys.path.insert(0, str(Path(__file__).parent))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def all_graphs(n: int):
    for index in range(1 << (n * (n - 1) // 2)):
        yield graph_from_index(n, index)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    bits = n * (n - 1) // 2
    index = draw(st.integers(0, (1 << bits) - 1))
    return graph_from_index(n, index)
