"""Edge swaps and unswappability.

A swap takes two disjoint edges {u,v}, {s,t} (u < v, s < t) and reconnects
them either CROSS ({u,t}, {s,v}) or PARALLEL ({u,s}, {v,t}).  A graph is
unswappable when no swap of either kind yields a simple graph isomorphic to
the original.  A reconnection that recreates an existing edge would produce
a multigraph, and such an outcome is never isomorphic to a simple target.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .errors import InputError
from .graph import Edge, Graph, _norm_edge, spanning_tree_count
from .iso import RefinedFingerprint, are_isomorphic, check_isomorphism


class Reconnection(enum.Enum):
    CROSS = "cross"
    PARALLEL = "parallel"


@dataclass(frozen=True)
class SwapMove:
    e1: Edge
    e2: Edge
    reconnection: Reconnection

    def __post_init__(self):
        a, b = sorted((_norm_edge(*self.e1), _norm_edge(*self.e2)))
        object.__setattr__(self, "e1", a)
        object.__setattr__(self, "e2", b)
        if len({*a, *b}) != 4:
            raise InputError(f"swap edges {a} and {b} are not disjoint")

    def new_edges(self) -> tuple[Edge, Edge]:
        (u, v), (s, t) = self.e1, self.e2
        if self.reconnection is Reconnection.CROSS:
            return _norm_edge(u, t), _norm_edge(s, v)
        return _norm_edge(u, s), _norm_edge(v, t)

    def key(self) -> tuple:
        return (self.e1, self.e2, 0 if self.reconnection is Reconnection.CROSS else 1)

    def as_pairs(self) -> tuple[Edge, Edge]:
        """Tuple style of the reference checker: CROSS pairs print as
        ``(e1, e2)``, PARALLEL pairs with the second edge reversed."""
        if self.reconnection is Reconnection.CROSS:
            return self.e1, self.e2
        return self.e1, (self.e2[1], self.e2[0])


MULTIEDGE = "MULTIEDGE"


def apply_swap(g: Graph, move: SwapMove) -> Graph | str:
    """The swapped graph, or the string ``MULTIEDGE`` if a new edge duplicates
    one that remains."""
    if move.e1 not in g.edges or move.e2 not in g.edges:
        raise InputError(f"swap edges {move.e1}, {move.e2} are not both edges of the graph")
    rest = g.edges - {move.e1, move.e2}
    new = move.new_edges()
    if new[0] in rest or new[1] in rest:
        return MULTIEDGE
    return Graph(g.n, rest | set(new))


def disjoint_pairs(g: Graph) -> Iterator[tuple[Edge, Edge]]:
    edges = g.edge_list
    for i, (u, v) in enumerate(edges):
        for s, t in edges[i + 1:]:
            if s != u and s != v and t != u and t != v:
                yield (u, v), (s, t)


def _reconnections(g: Graph) -> Iterator[tuple[Edge, Edge, SwapMove | None, SwapMove | None]]:
    """Each disjoint pair in lexicographic order with its CROSS and PARALLEL
    moves; a move is None when it would create a multi-edge (the removed edges
    are disjoint from the new ones, so the original adjacency decides)."""
    masks = g.masks
    for (u, v), (s, t) in disjoint_pairs(g):
        cross = None if (masks[u] >> t) & 1 or (masks[s] >> v) & 1 else SwapMove((u, v), (s, t), Reconnection.CROSS)
        par = None if (masks[u] >> s) & 1 or (masks[v] >> t) & 1 else SwapMove((u, v), (s, t), Reconnection.PARALLEL)
        yield (u, v), (s, t), cross, par


def _simple_moves(g: Graph) -> Iterator[SwapMove]:
    for _, _, cross, par in _reconnections(g):
        if cross is not None:
            yield cross
        if par is not None:
            yield par


def _triangle_delta(masks: tuple[int, ...], move: SwapMove) -> int:
    """Change in the number of triangles caused by ``move``."""
    m = list(masks)
    delta = 0
    for a, b in (move.e1, move.e2):
        m[a] &= ~(1 << b)
        m[b] &= ~(1 << a)
        delta -= (m[a] & m[b]).bit_count()
    for a, b in move.new_edges():
        delta += (m[a] & m[b]).bit_count()
        m[a] |= 1 << b
        m[b] |= 1 << a
    return delta


class SwapStatus(enum.Enum):
    UNSWAPPABLE = "unswappable"
    SWAPPABLE = "swappable"
    TOO_SMALL = "too-small"


@dataclass
class SwapVerdict:
    status: SwapStatus
    witness: SwapMove | None = None
    pairs_checked: int = 0
    multiedge_skips: int = 0
    witnesses: list[SwapMove] = field(default_factory=list)
    mapping: dict[int, int] | None = None

    @property
    def unswappable(self) -> bool:
        return self.status is SwapStatus.UNSWAPPABLE

    def __bool__(self) -> bool:
        raise TypeError("use .unswappable or .status; a verdict is not a plain boolean")


def is_unswappable(g: Graph, *, all_witnesses: bool = False) -> SwapVerdict:
    """Exhaustive unswappability check.

    Stops at the first witness unless ``all_witnesses`` is set.  Graphs with
    fewer than 4 vertices get status TOO_SMALL (not unswappable by convention).
    Each candidate passes three filters of increasing cost: triangle-count
    change, refined colouring fingerprint, full isomorphism search.
    """
    if g.n < 4:
        return SwapVerdict(SwapStatus.TOO_SMALL)
    masks = g.masks
    fingerprint = RefinedFingerprint()
    target = None
    verdict = SwapVerdict(SwapStatus.UNSWAPPABLE)
    for _, _, cross, par in _reconnections(g):
        verdict.pairs_checked += 1
        for move in (cross, par):
            if move is None:
                verdict.multiedge_skips += 1
                continue
            if _triangle_delta(masks, move) != 0:
                continue
            swapped = apply_swap(g, move)
            if target is None:
                target = fingerprint(g)
            if fingerprint(swapped) != target:
                continue
            ok, mapping = are_isomorphic(swapped, g)
            if not ok:
                continue
            assert check_isomorphism(swapped, g, mapping)
            if verdict.witness is None:
                verdict.status = SwapStatus.SWAPPABLE
                verdict.witness = move
                verdict.mapping = mapping
            verdict.witnesses.append(move)
            if not all_witnesses:
                return verdict
    return verdict


def proxy_swap_candidates(g: Graph) -> list[SwapMove]:
    """Swaps whose (simple) result has the same spanning-tree count as ``g``.

    An empty list means proxy-unswappable; the proxy can report false
    candidates (non-isomorphic graphs with equal counts) but never misses a
    true witness.
    """
    if g.n < 2:
        return []
    base = spanning_tree_count(g)
    out = []
    for move in _simple_moves(g):
        swapped = apply_swap(g, move)
        if spanning_tree_count(swapped) == base:
            out.append(move)
    return out
