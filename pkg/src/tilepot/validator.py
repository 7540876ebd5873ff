"""Brute-force output sets of small pots.

:func:`enumerate_outputs` lists every complete complex a pot can form up to a
given order, :func:`realizes` searches for an assembly design of one target,
and :func:`validate_scenario3` compares the two.

A complex is a multiset of tiles plus, for every bond, a table saying how many
unhatted ends at vertex u are joined to hatted ends at vertex w.  Ends of the
same kind on one vertex are interchangeable, so the table (not the individual
pairing) determines the complex.  Complexes are deduplicated by the canonical
form of their underlying multigraph.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph, is_connected
from .iso import are_isomorphic, canonical_form
from .pot import AssemblyDesign, CohesiveEnd, Pot, TileType, check_assembly

COMPLETE = "COMPLETE"
INCOMPLETE = "INCOMPLETE"


@dataclass(frozen=True)
class Complex:
    """Tiles per vertex and bonded pairs ``(unhatted_vertex, hatted_vertex, bond, count)``."""

    tiles: tuple[TileType, ...]
    bonds: tuple[tuple[int, int, int, int], ...]

    @property
    def order(self) -> int:
        return len(self.tiles)

    def multiplicity(self) -> dict[tuple[int, int], int]:
        out: Counter = Counter()
        for u, w, _, k in self.bonds:
            out[(u, w) if u <= w else (w, u)] += k
        return dict(out)

    def is_simple(self) -> bool:
        return all(u != v and k == 1 for (u, v), k in self.multiplicity().items())

    def is_connected(self) -> bool:
        edges = [e for e in self.multiplicity() if e[0] != e[1]]
        return is_connected(Graph(self.order, edges))

    def graph(self) -> Graph:
        """Underlying simple graph; only valid when :meth:`is_simple`."""
        return Graph(self.order, self.multiplicity().keys())

    def design(self) -> AssemblyDesign:
        """Assembly design of the underlying simple graph."""
        labels = {}
        for u, w, b, _ in self.bonds:
            labels[(u, w)] = (b, u)
        return AssemblyDesign(self.graph(), labels, self.tiles)

    def describe(self) -> str:
        parts = [f"{v}:{t}" for v, t in enumerate(self.tiles)]
        edges = []
        for (u, v), k in sorted(self.multiplicity().items()):
            edges.append(f"{u}-{v}" + (f"x{k}" if k > 1 else ""))
        return "tiles " + " ".join(parts) + "; edges " + " ".join(edges)

    def to_doc(self) -> dict:
        return {
            "order": self.order,
            "tiles": [str(t) for t in self.tiles],
            "bonds": [{"unhatted": u, "hatted": w, "bond": b, "count": k} for u, w, b, k in self.bonds],
            "simple": self.is_simple(),
        }


@dataclass
class OutputClass:
    key: tuple
    representative: Complex
    hits: int = 1


@dataclass
class Enumeration:
    status: str
    outputs: list[OutputClass]
    matchings_explored: int
    unexplored_multisets: int = 0

    def by_order(self) -> dict[int, list[OutputClass]]:
        out: dict[int, list[OutputClass]] = {}
        for c in self.outputs:
            out.setdefault(c.representative.order, []).append(c)
        return out


def _balanced_multisets(pot: Pot, max_order: int) -> Iterator[tuple[int, ...]]:
    """Tile-index multisets, sorted, of size 1..max_order with zero net charge
    on every bond."""
    tiles = pot.tiles
    bonds = pot.bonds
    charge = [[t.counts()[CohesiveEnd(b, False)] - t.counts()[CohesiveEnd(b, True)] for b in bonds] for t in tiles]
    for size in range(1, max_order + 1):
        for combo in itertools.combinations_with_replacement(range(len(tiles)), size):
            if all(sum(charge[i][j] for i in combo) == 0 for j in range(len(bonds))):
                yield combo


def _tables(rows: list[int], cols: list[int]) -> Iterator[list[list[int]]]:
    """Nonnegative integer matrices with the given row and column sums."""
    r, c = len(rows), len(cols)
    mat = [[0] * c for _ in range(r)]
    colleft = list(cols)

    def fill(i: int, j: int, rowleft: int) -> Iterator[list[list[int]]]:
        if i == r:
            yield [row[:] for row in mat]
            return
        if j == c - 1:
            x = rowleft
            if x > colleft[j]:
                return
            mat[i][j] = x
            colleft[j] -= x
            yield from fill(i + 1, 0, rows[i + 1] if i + 1 < r else 0)
            colleft[j] += x
            mat[i][j] = 0
            return
        for x in range(min(rowleft, colleft[j]), -1, -1):
            mat[i][j] = x
            colleft[j] -= x
            yield from fill(i, j + 1, rowleft - x)
            colleft[j] += x
        mat[i][j] = 0

    if r == 0:
        yield []
        return
    yield from fill(0, 0, rows[0])


def _complexes(tiles: tuple[TileType, ...], bonds: list[int]) -> Iterator[Complex]:
    per_bond = []
    for b in bonds:
        un = [(v, t.counts()[CohesiveEnd(b, False)]) for v, t in enumerate(tiles)]
        ha = [(v, t.counts()[CohesiveEnd(b, True)]) for v, t in enumerate(tiles)]
        un = [x for x in un if x[1]]
        ha = [x for x in ha if x[1]]
        if not un:
            continue
        options = []
        for mat in _tables([k for _, k in un], [k for _, k in ha]):
            options.append(
                tuple((un[i][0], ha[j][0], b, mat[i][j]) for i in range(len(un)) for j in range(len(ha)) if mat[i][j])
            )
        per_bond.append(options)
    for choice in itertools.product(*per_bond):
        yield Complex(tiles, tuple(sorted(x for part in choice for x in part)))


def complex_key(cx: Complex) -> tuple:
    """Canonical form of the underlying multigraph (loops included)."""
    return canonical_form(cx.order, cx.multiplicity(), [0] * cx.order)


def enumerate_outputs(
    pot: Pot,
    max_order: int,
    *,
    connected_only: bool = True,
    simple_only: bool = False,
    ceiling: int = 10**7,
) -> Enumeration:
    """Every complete complex of order <= ``max_order``, one per isomorphism
    class of its underlying multigraph.

    ``ceiling`` caps the number of bond tables examined; hitting it ends the
    run with status INCOMPLETE and the count of tile multisets left unexplored.
    """
    bonds = pot.bonds
    seen: dict[tuple, OutputClass] = {}
    explored = 0
    multisets = list(_balanced_multisets(pot, max_order))
    for idx, combo in enumerate(multisets):
        tiles = tuple(pot.tiles[i] for i in combo)
        for cx in _complexes(tiles, bonds):
            explored += 1
            if explored > ceiling:
                return Enumeration(INCOMPLETE, _ordered(seen), explored - 1, len(multisets) - idx)
            if simple_only and not cx.is_simple():
                continue
            if connected_only and not cx.is_connected():
                continue
            key = complex_key(cx)
            if key in seen:
                seen[key].hits += 1
            else:
                seen[key] = OutputClass(key, cx)
    return Enumeration(COMPLETE, _ordered(seen), explored)


def _ordered(seen: dict[tuple, OutputClass]) -> list[OutputClass]:
    return sorted(seen.values(), key=lambda c: (c.representative.order, c.key))


# ---------------------------------------------------------------- realizes


@dataclass
class Realization:
    status: str  # REALIZES, DOES_NOT_REALIZE or INCOMPLETE
    design: AssemblyDesign | None = None
    nodes: int = 0

    @property
    def realizes(self) -> bool:
        return self.status == "REALIZES"


def realizes(pot: Pot, g: Graph, *, ceiling: int = 10**7) -> Realization:
    """Search for an assembly design of ``g`` that uses only tiles of ``pot``.

    Vertices are visited by decreasing degree; each gets a tile of matching
    size, and every edge back to an earlier vertex takes an end of the new
    tile whose complement is still free at the other endpoint.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    back = [sorted((w for w in g.adjacency[v] if pos[w] < pos[v]), key=lambda w: pos[w]) for v in order]
    by_size: dict[int, list[TileType]] = {}
    for t in pot.tiles:
        by_size.setdefault(len(t), []).append(t)
    left: dict[int, Counter] = {}
    chosen: dict[int, TileType] = {}
    labels: dict[tuple[int, int], tuple[int, int]] = {}
    nodes = [0]

    def place(i: int) -> bool | None:
        if i == n:
            return True
        v = order[i]
        for t in by_size.get(g.degree(v), []):
            left[v] = t.counts()
            chosen[v] = t
            r = bond_edges(i, v, 0)
            if r is None or r:
                return r
        left.pop(v, None)
        chosen.pop(v, None)
        return False

    def bond_edges(i: int, v: int, j: int) -> bool | None:
        nodes[0] += 1
        if nodes[0] > ceiling:
            return None
        if j == len(back[i]):
            return place(i + 1)
        w = back[i][j]
        for e in sorted(+left[v]):
            comp = e.complement()
            if left[w][comp] <= 0:
                continue
            left[v][e] -= 1
            left[w][comp] -= 1
            labels[(v, w) if v < w else (w, v)] = (e.bond, w if e.hatted else v)
            r = bond_edges(i, v, j + 1)
            if r is None or r:
                return r
            left[v][e] += 1
            left[w][comp] += 1
            del labels[(v, w) if v < w else (w, v)]
        return False

    if any(g.degree(v) == 0 for v in range(n)):
        return Realization("DOES_NOT_REALIZE", None, 0)
    r = place(0)
    if r is None:
        return Realization(INCOMPLETE, None, nodes[0] - 1)
    if not r:
        return Realization("DOES_NOT_REALIZE", None, nodes[0])
    d = AssemblyDesign(g, labels, [chosen[v] for v in range(n)])
    assert not check_assembly(d)
    return Realization("REALIZES", d, nodes[0])


# ---------------------------------------------------------------- scenario 3


@dataclass
class OutputReport:
    status: str
    realizes_target: bool
    scenario3_ok: bool | None
    counterexample: Complex | None
    enumeration: Enumeration | None = None
    target_design: AssemblyDesign | None = None
    notes: list[str] = field(default_factory=list)

    def to_doc(self) -> dict:
        by_order = {}
        if self.enumeration is not None:
            for k, classes in sorted(self.enumeration.by_order().items()):
                by_order[str(k)] = [{"complex": c.representative.to_doc(), "hits": c.hits} for c in classes]
        return {
            "status": self.status,
            "realizes_target": self.realizes_target,
            "scenario3_ok": self.scenario3_ok,
            "counterexample": None if self.counterexample is None else self.counterexample.to_doc(),
            "complexes_by_order": by_order,
            "matchings_explored": None if self.enumeration is None else self.enumeration.matchings_explored,
            "notes": list(self.notes),
        }


def validate_scenario3(
    pot: Pot,
    g: Graph,
    *,
    max_order: int | None = None,
    connected_only: bool = True,
    simple_only: bool = False,
    ceiling: int = 10**7,
) -> OutputReport:
    """Scenario-3 check of ``pot`` against ``g`` up to ``max_order`` (default
    #V(g)).  Any output of smaller order, or of equal order but not isomorphic
    to ``g`` (multigraphs and loops included), is a counterexample."""
    notes = []
    target_order = g.n
    cap = target_order if max_order is None else min(max_order, target_order)
    if cap < target_order:
        notes.append(f"enumeration capped at order {cap} < {target_order}; result covers orders <= {cap} only")
    real = realizes(pot, g, ceiling=ceiling)
    if real.status == INCOMPLETE:
        return OutputReport(INCOMPLETE, False, None, None, notes=notes + ["realizes search hit the ceiling"])
    if not real.realizes:
        return OutputReport(COMPLETE, False, False, None, notes=notes + ["pot does not realize the target"])
    en = enumerate_outputs(pot, cap, connected_only=connected_only, simple_only=simple_only, ceiling=ceiling)
    target_key = None
    counter = None
    for c in en.outputs:
        cx = c.representative
        if cx.order == target_order and cx.is_simple():
            if target_key is None:
                ok, _ = are_isomorphic(cx.graph(), g)
                if ok:
                    target_key = c.key
                    continue
            elif c.key == target_key:
                continue
        counter = cx
        break
    if counter is not None:
        return OutputReport(en.status, True, False, counter, en, real.design, notes)
    if en.status == INCOMPLETE:
        notes.append(f"ceiling reached; {en.unexplored_multisets} tile multisets unexplored")
        return OutputReport(INCOMPLETE, True, None, None, en, real.design, notes)
    return OutputReport(COMPLETE, True, True, None, en, real.design, notes)
