"""Graph isomorphism by colour refinement and individualisation backtracking.

Two entry points:

* :func:`are_isomorphic` for simple graphs, returning a witness bijection;
* :func:`canonical_form` for small vertex-coloured multigraphs with loops,
  used to deduplicate assembled complexes.

Both refine an equitable colouring to a fixpoint (colour signature = own
colour plus the multiset of neighbour colours), then individualise one vertex
of the first smallest non-trivial cell and recurse.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .graph import Graph


def vertex_invariants(g: Graph) -> list[tuple]:
    """Isomorphism-invariant colour per vertex.

    (degree, sorted common-neighbour counts towards neighbours, the same towards
    non-neighbours).  The common-neighbour profile separates most regular graphs
    that plain degree refinement cannot (e.g. a graph and a swapped copy with a
    different triangle count).
    """
    masks = g.masks
    out = []
    for v in range(g.n):
        mv = masks[v]
        adj_counts = []
        non_counts = []
        for u in range(g.n):
            if u == v:
                continue
            c = (mv & masks[u]).bit_count()
            if (mv >> u) & 1:
                adj_counts.append(c)
            else:
                non_counts.append(c)
        out.append((mv.bit_count(), tuple(sorted(adj_counts)), tuple(sorted(non_counts))))
    return out


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Refine to the coarsest equitable colouring finer than ``colors``.

    New colour names are assigned by sorting signatures, so the result depends
    only on the (coloured) graph, not on vertex numbering.
    """
    n_cells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        names = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [names[s] for s in sigs]
        if len(names) == n_cells:
            return new
        n_cells = len(names)
        colors = new


def _individualise(colors: list[int], picks: Sequence[int]) -> list[int]:
    top = max(colors) + 1
    out = list(colors)
    for v in picks:
        out[v] = top
    return out


class _UnionSearch:
    """Backtracking over the disjoint union of two graphs (side A = 0..n-1,
    side B = n..2n-1)."""

    def __init__(self, g1: Graph, g2: Graph):
        self.n = g1.n
        self.g1, self.g2 = g1, g2
        n = self.n
        self.adj = [sorted(a) for a in g1.adjacency] + [[w + n for w in sorted(a)] for a in g2.adjacency]
        inv = vertex_invariants(g1) + vertex_invariants(g2)
        names = {s: i for i, s in enumerate(sorted(set(inv)))}
        self.start = [names[s] for s in inv]
        self.nodes = 0

    def balanced(self, colors: list[int]) -> bool:
        n = self.n
        return sorted(colors[:n]) == sorted(colors[n:])

    def run(self) -> dict[int, int] | None:
        colors = _refine(self.adj, self.start)
        if not self.balanced(colors):
            return None
        return self._search(colors)

    def _search(self, colors: list[int]) -> dict[int, int] | None:
        self.nodes += 1
        n = self.n
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 2 and (target is None or len(cells[c]) < len(cells[target])):
                target = c
        if target is None:
            mapping = {}
            for members in cells.values():
                a, b = members
                mapping[a] = b - n
            return mapping if self._valid(mapping) else None
        members = cells[target]
        x = min(v for v in members if v < n)
        for y in sorted(v for v in members if v >= n):
            trial = _refine(self.adj, _individualise(colors, (x, y)))
            if self.balanced(trial):
                found = self._search(trial)
                if found is not None:
                    return found
        return None

    def _valid(self, mapping: dict[int, int]) -> bool:
        e2 = self.g2.edges
        for u, v in self.g1.edges:
            a, b = mapping[u], mapping[v]
            if (a, b) not in e2 and (b, a) not in e2:
                return False
        return True


def are_isomorphic(g1: Graph, g2: Graph) -> tuple[bool, dict[int, int] | None]:
    """Decide isomorphism; the witness maps each vertex of ``g1`` to ``g2``."""
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False, None
    if g1.n == 0:
        return True, {}
    mapping = _UnionSearch(g1, g2).run()
    return mapping is not None, mapping


def check_isomorphism(g1: Graph, g2: Graph, mapping: dict[int, int]) -> bool:
    """True iff ``mapping`` is an edge-preserving bijection from g1 onto g2."""
    if sorted(mapping) != list(range(g1.n)) or sorted(mapping.values()) != list(range(g2.n)):
        return False
    if g1.m != g2.m:
        return False
    return all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges)


class RefinedFingerprint:
    """Isomorphism invariant of a simple graph: the stable refined colouring
    histogram, with signatures interned in a table shared by every graph
    fingerprinted through the same instance."""

    def __init__(self):
        self._table: dict[Hashable, int] = {}

    def _name(self, sig) -> int:
        t = self._table
        if sig not in t:
            t[sig] = len(t)
        return t[sig]

    def __call__(self, g: Graph) -> tuple:
        adj = [sorted(a) for a in g.adjacency]
        colors = [self._name(("inv", s)) for s in vertex_invariants(g)]
        n_cells = len(set(colors))
        while True:
            colors = [self._name((colors[v], tuple(sorted(colors[w] for w in adj[v])))) for v in range(g.n)]
            k = len(set(colors))
            if k == n_cells:
                break
            n_cells = k
        return tuple(sorted(colors))


# ------------------------------------------------------ coloured multigraphs


def canonical_form(n: int, multiplicity: dict[tuple[int, int], int], colors: Sequence[Hashable]) -> tuple:
    """Canonical certificate of a vertex-coloured multigraph with loops.

    ``multiplicity`` maps (u, v) with u <= v to the number of parallel edges
    (u == v for loops).  Two inputs get the same certificate iff they are
    isomorphic by a colour-preserving bijection.  Exponential in the worst
    case; meant for complexes of at most ~10 vertices.
    """
    nbr: list[dict[int, int]] = [dict() for _ in range(n)]
    loops = [0] * n
    for (u, v), k in multiplicity.items():
        if k == 0:
            continue
        if u == v:
            loops[u] += k
        else:
            nbr[u][v] = nbr[u].get(v, 0) + k
            nbr[v][u] = nbr[v].get(u, 0) + k
    base = sorted(set(colors))
    start_names = {c: i for i, c in enumerate(base)}
    start = [start_names[c] for c in colors]

    def refine(cols: list[int]) -> list[int]:
        n_cells = len(set(cols))
        while True:
            sigs = [
                (cols[v], loops[v], tuple(sorted((cols[w], k) for w, k in nbr[v].items())))
                for v in range(n)
            ]
            names = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [names[s] for s in sigs]
            if len(names) == n_cells:
                return new
            n_cells = len(names)
            cols = new

    best: list[tuple | None] = [None]

    def leaf(cols: list[int]) -> tuple:
        pos = cols  # discrete: colour is the new index
        edges = []
        for (u, v), k in multiplicity.items():
            if k:
                a, b = pos[u], pos[v]
                edges.append(((a, b) if a <= b else (b, a), k))
        order = sorted(range(n), key=lambda v: pos[v])
        return (n, tuple(start[v] for v in order), tuple(sorted(edges)))

    def search(cols: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(cols):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1 and (target is None or len(cells[c]) < len(cells[target])):
                target = c
        if target is None:
            cert = leaf(cols)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        for x in cells[target]:
            split = [2 * c + (0 if v == x else 1) if c == target else 2 * c + 1 for v, c in enumerate(cols)]
            search(refine(split))

    search(refine(start))
    return (tuple(base), best[0])
