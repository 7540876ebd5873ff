"""Random graph generators shared by the tests."""

import random

from hypothesis import strategies as st

from tilepot.graph import Graph, is_connected


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, chosen)
    if connected and not is_connected(g):
        # join components along a path so the graph stays random but connected
        extra = set(chosen)
        comp = _components(g)
        for a, b in zip(comp, comp[1:]):
            extra.add((min(a[0], b[0]), max(a[0], b[0])))
        g = Graph(n, extra)
    return g


def _components(g):
    seen = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g
