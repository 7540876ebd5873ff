"""Simple undirected graphs and the generic algorithms built on them.

Vertices are the integers ``0..n-1``.  Adjacency is kept as one bitmask per
vertex, which keeps neighbourhood intersections (common neighbours, triangle
counts) cheap for the swap checker.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Sequence

from .errors import InputError, PreconditionError
from .linalg import bareiss_determinant

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``labels`` are display strings only; ``family`` is the generating
    :class:`~tilepot.families.FamilySpec` when the graph came from a family
    generator.  Neither takes part in equality.
    """

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    family: Any = field(default=None, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels=None, family=None):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            ne = _norm_edge(u, v)
            if ne in seen:
                raise InputError(f"duplicate edge {ne}")
            seen.add(ne)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InputError(f"{len(labels)} labels for {n} vertices")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "family", family)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def regularity(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return 0 if self.n == 0 else None

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabel needs a permutation of 0..n-1")
        labels = None
        if self.labels is not None:
            new = [""] * self.n
            for v, p in enumerate(perm):
                new[p] = self.labels[v]
            labels = new
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges), labels)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex {v!r} out of range 0..{self.n - 1}")


# ---------------------------------------------------------------- builders


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# ------------------------------------------------------------- neighbourhoods


def neighbor_set(g: Graph, v: int) -> frozenset[int]:
    g.check_vertex(v)
    return g.adjacency[v]


def count_distinct_neighbor_sets(g: Graph) -> int:
    return len(set(g.masks))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``.

    Returns the re-indexed graph and the list mapping new index -> old vertex
    (in ascending old-vertex order).
    """
    keep = sorted(set(vertices))
    for v in keep:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    return Graph(len(keep), edges, labels), keep


# --------------------------------------------------------------- connectivity


def _reach(n: int, succ: Sequence[Iterable[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in succ[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(_reach(g.n, g.adjacency, 0)) == g.n


def find_bridges(g: Graph) -> list[Edge]:
    """All bridges, by one iterative DFS with low-link values."""
    n = g.n
    order = [-1] * n
    low = [0] * n
    bridges: list[Edge] = []
    counter = 0
    adj = [sorted(a) for a in g.adjacency]
    for root in range(n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        # frame: (vertex, parent, next neighbour index)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = adj[v][i]
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], order[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > order[parent]:
                        bridges.append(_norm_edge(parent, v))
    return sorted(bridges)


def is_two_edge_connected(g: Graph) -> tuple[bool, list[Edge]]:
    """(True, []) if connected and bridge-free, else (False, bridges).

    A disconnected graph with no bridges returns (False, []).
    """
    bridges = find_bridges(g)
    return (is_connected(g) and not bridges), bridges


# --------------------------------------------------------------- orientation


@dataclass(frozen=True)
class Orientation:
    """A direction (source, sink) for every edge of ``base``."""

    base: Graph
    arcs: frozenset[Edge]

    def __init__(self, base: Graph, arcs: Iterable[Sequence[int]]):
        arcs = frozenset((int(a), int(b)) for a, b in arcs)
        covered = [_norm_edge(a, b) for a, b in arcs]
        if len(covered) != len(set(covered)):
            raise InputError("an edge is oriented both ways")
        if set(covered) != base.edges:
            extra = set(covered) - base.edges
            missing = base.edges - set(covered)
            raise InputError(
                f"orientation does not match graph edges (extra {sorted(extra)}, missing {sorted(missing)})"
            )
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "arcs", arcs)

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.base.n)]
        for a, b in sorted(self.arcs):
            succ[a].append(b)
        return succ

    def predecessors(self) -> list[list[int]]:
        pred: list[list[int]] = [[] for _ in range(self.base.n)]
        for a, b in sorted(self.arcs):
            pred[b].append(a)
        return pred

    def source_of(self, u: int, v: int) -> int:
        return u if (u, v) in self.arcs else v


def is_strongly_connected(o: Orientation) -> bool:
    n = o.base.n
    if n <= 1:
        return True
    return len(_reach(n, o.successors(), 0)) == n and len(_reach(n, o.predecessors(), 0)) == n


def strong_orientation(g: Graph) -> Orientation:
    """Robbins orientation: DFS tree edges point away from the root, back edges
    point towards it."""
    ok, bridges = is_two_edge_connected(g)
    if not ok:
        if bridges:
            raise PreconditionError(f"graph has a bridge {bridges[0]}; no strong orientation exists", bridges[0])
        raise PreconditionError("graph is disconnected; no strong orientation exists")
    arcs: set[Edge] = set()
    oriented: set[Edge] = set()
    if g.n:
        adj = [sorted(a) for a in g.adjacency]
        depth = [-1] * g.n
        depth[0] = 0
        stack = [(0, 0)]
        while stack:
            v, i = stack[-1]
            if i == len(adj[v]):
                stack.pop()
                continue
            stack[-1] = (v, i + 1)
            w = adj[v][i]
            e = _norm_edge(v, w)
            if e in oriented:
                continue
            oriented.add(e)
            if depth[w] == -1:
                depth[w] = depth[v] + 1
                arcs.add((v, w))
                stack.append((w, 0))
            else:
                # w is an ancestor of v: back edge towards the root
                arcs.add((v, w))
    return Orientation(g, arcs)


# -------------------------------------------------------------- spanning trees


def laplacian(g: Graph) -> list[list[int]]:
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][v] -= 1
        lap[v][u] -= 1
        lap[u][u] += 1
        lap[v][v] += 1
    return lap


def spanning_tree_count(g: Graph) -> int:
    """Exact number of spanning trees (Matrix-Tree theorem, Bareiss determinant
    of the Laplacian with the last row and column removed)."""
    if g.n == 0:
        raise InputError("spanning_tree_count needs at least one vertex")
    if g.n == 1:
        return 1
    lap = laplacian(g)
    reduced = [row[:-1] for row in lap[:-1]]
    return bareiss_determinant(reduced)
