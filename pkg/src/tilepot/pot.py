"""Flexible-tile-model vocabulary: cohesive ends, tile types, pots, assembly
designs.

Bond-edge types are small nonnegative integers, displayed as ``a..z``, then
``a1..z1``, ``a2`` and so on.  A hatted end renders with a ``^`` prefix.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import InputError
from .graph import Edge, Graph, _norm_edge


def bond_name(b: int) -> str:
    letter = chr(ord("a") + b % 26)
    cycle = b // 26
    return letter if cycle == 0 else f"{letter}{cycle}"


_BOND_RE = re.compile(r"([a-z])(\d*)$")


def parse_bond(name: str) -> int:
    m = _BOND_RE.match(name)
    if not m:
        raise InputError(f"bad bond-edge name {name!r}")
    cycle = int(m.group(2)) if m.group(2) else 0
    if m.group(2) and (m.group(2).startswith("0") or cycle == 0):
        raise InputError(f"bad bond-edge name {name!r}")
    return cycle * 26 + ord(m.group(1)) - ord("a")


class CohesiveEnd(NamedTuple):
    bond: int
    hatted: bool

    def complement(self) -> CohesiveEnd:
        return CohesiveEnd(self.bond, not self.hatted)

    def __str__(self) -> str:
        return ("^" if self.hatted else "") + bond_name(self.bond)


def end(bond: int, hatted: bool = False) -> CohesiveEnd:
    return CohesiveEnd(bond, hatted)


@dataclass(frozen=True, order=True)
class TileType:
    """A multiset of cohesive ends, stored sorted by (bond, hatted)."""

    ends: tuple[CohesiveEnd, ...]

    def __init__(self, ends: Iterable[CohesiveEnd | tuple[int, bool]]):
        ends = tuple(sorted(CohesiveEnd(int(b), bool(h)) for b, h in ends))
        if not ends:
            raise InputError("a tile type needs at least one cohesive end")
        object.__setattr__(self, "ends", ends)

    def __len__(self) -> int:
        return len(self.ends)

    def counts(self) -> Counter:
        return Counter(self.ends)

    def bonds(self) -> set[int]:
        return {e.bond for e in self.ends}

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.ends) + "}"

    def pretty(self) -> str:
        """Multiplicity shorthand, e.g. ``{a*3,^b}``."""
        parts = []
        for e, k in sorted(self.counts().items()):
            parts.append(str(e) + (f"*{k}" if k > 1 else ""))
        return "{" + ",".join(parts) + "}"


def g_value(t: TileType) -> int:
    """Unhatted minus hatted end count."""
    return sum(-1 if e.hatted else 1 for e in t.ends)


@dataclass(frozen=True)
class Pot:
    """A set of distinct tile types, kept sorted."""

    tiles: tuple[TileType, ...]

    def __init__(self, tiles: Iterable[TileType]):
        object.__setattr__(self, "tiles", tuple(sorted(set(tiles))))

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def __contains__(self, t) -> bool:
        return t in self.tiles

    @property
    def bonds(self) -> list[int]:
        """Sigma(P): bond-edge types appearing in any tile."""
        return sorted({b for t in self.tiles for b in t.bonds()})

    def renamed(self, mapping: Mapping[int, int]) -> Pot:
        return Pot(TileType((mapping[e.bond], e.hatted) for e in t.ends) for t in self.tiles)

    def __str__(self) -> str:
        return "{" + ", ".join(str(t) for t in self.tiles) + "}"


def _bond_signature(pot: Pot, b: int) -> tuple:
    """Renaming-invariant profile of bond ``b`` within ``pot``."""
    return tuple(sorted((t.ends.count((b, False)), t.ends.count((b, True)), len(t)) for t in pot.tiles if b in t.bonds()))


def pot_isomorphism(p: Pot, q: Pot) -> dict[int, int] | None:
    """A bond renaming sending pot ``p`` onto pot ``q``, or None."""
    if len(p) != len(q) or len(p.bonds) != len(q.bonds):
        return None
    if sorted(len(t) for t in p) != sorted(len(t) for t in q):
        return None
    sig_q: dict[tuple, list[int]] = {}
    for b in q.bonds:
        sig_q.setdefault(_bond_signature(q, b), []).append(b)
    pb = p.bonds
    cands = []
    for b in pb:
        s = _bond_signature(p, b)
        if s not in sig_q:
            return None
        cands.append(sig_q[s])
    target = set(q.tiles)
    order = sorted(range(len(pb)), key=lambda i: len(cands[i]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent() -> bool:
        # every p-tile whose bonds are all mapped must land inside q
        for t in p.tiles:
            if all(e.bond in mapping for e in t.ends):
                if TileType((mapping[e.bond], e.hatted) for e in t.ends) not in target:
                    return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return p.renamed(mapping) == q
        i = order[k]
        for c in cands[i]:
            if c in used:
                continue
            mapping[pb[i]] = c
            used.add(c)
            if consistent() and search(k + 1):
                return True
            used.discard(c)
            del mapping[pb[i]]
        return False

    return dict(mapping) if search(0) else None


# ------------------------------------------------------------ assembly design


@dataclass(frozen=True)
class AssemblyDesign:
    """Edge labelling of a graph: each edge gets (bond, source endpoint).

    The source endpoint carries the unhatted end, the other endpoint the hatted
    one.  ``claimed_tiles``, when given, is a per-vertex tile assignment that
    :func:`check_assembly` compares against the tiles induced by the labels.
    """

    graph: Graph
    edge_label: Mapping[Edge, tuple[int, int]]
    claimed_tiles: tuple[TileType, ...] | None = field(default=None)

    def __init__(self, graph: Graph, edge_label: Mapping[Sequence[int], tuple[int, int]], claimed_tiles=None):
        labels = {}
        for e, (bond, src) in edge_label.items():
            labels[_norm_edge(*e)] = (int(bond), int(src))
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "edge_label", labels)
        object.__setattr__(self, "claimed_tiles", tuple(claimed_tiles) if claimed_tiles is not None else None)

    def half_edges(self) -> dict[tuple[int, int], CohesiveEnd]:
        """Label of the half-edge at ``v`` on edge {v, w}, keyed (v, w)."""
        out = {}
        for (u, v), (bond, src) in self.edge_label.items():
            out[(src, v if src == u else u)] = CohesiveEnd(bond, False)
            out[(v if src == u else u, src)] = CohesiveEnd(bond, True)
        return out

    def tile(self, v: int) -> TileType:
        ends = [CohesiveEnd(b, src != v) for (x, y), (b, src) in self.edge_label.items() if v in (x, y)]
        return TileType(ends)

    def tiles(self) -> list[TileType | None]:
        """Induced tile per vertex (None for an isolated vertex)."""
        per: list[list[CohesiveEnd]] = [[] for _ in range(self.graph.n)]
        for (x, y), (b, src) in self.edge_label.items():
            per[x].append(CohesiveEnd(b, src != x))
            per[y].append(CohesiveEnd(b, src != y))
        return [TileType(e) if e else None for e in per]


@dataclass(frozen=True)
class Violation:
    kind: str
    where: object
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.where}: {self.detail}"


def check_half_edges(graph: Graph, half: Mapping[tuple[int, int], CohesiveEnd]) -> list[Violation]:
    """Check a raw half-edge labelling: every edge must carry a complementary
    pair, and no half-edge may be labelled off an edge."""
    out = []
    for (v, w) in half:
        if not graph.has_edge(v, w):
            out.append(Violation("not-an-edge", (v, w), "half-edge label on a non-edge"))
    for u, v in graph.edge_list:
        a, b = half.get((u, v)), half.get((v, u))
        if a is None or b is None:
            out.append(Violation("unlabelled", (u, v), "edge is missing a half-edge label"))
        elif a.complement() != b:
            out.append(Violation("non-complementary", (u, v), f"halves {a} and {b} do not pair"))
    return out


def check_assembly(d: AssemblyDesign) -> list[Violation]:
    """Empty list iff ``d`` is a valid assembly design of its graph."""
    g = d.graph
    out = []
    for e, (bond, src) in sorted(d.edge_label.items()):
        if e not in g.edges:
            out.append(Violation("not-an-edge", e, "label on a pair that is not an edge"))
        elif src not in e:
            out.append(Violation("bad-source", e, f"source {src} is not an endpoint"))
        if bond < 0:
            out.append(Violation("bad-bond", e, f"bond id {bond} is negative"))
    for e in g.edge_list:
        if e not in d.edge_label:
            out.append(Violation("unlabelled", e, "edge has no label"))
    if out:
        return out
    out.extend(check_half_edges(g, d.half_edges()))
    derived = d.tiles()
    for v in range(g.n):
        deg = g.degree(v)
        have = len(derived[v]) if derived[v] is not None else 0
        if have != deg:
            out.append(Violation("degree-mismatch", v, f"tile has {have} ends, degree {deg}"))
    if d.claimed_tiles is not None:
        if len(d.claimed_tiles) != g.n:
            out.append(Violation("tile-count", None, f"{len(d.claimed_tiles)} claimed tiles for {g.n} vertices"))
        else:
            for v, t in enumerate(d.claimed_tiles):
                if t != derived[v]:
                    out.append(Violation("tile-mismatch", v, f"claimed {t}, labels induce {derived[v]}"))
    if not out and g.m:
        total = sum(g_value(t) for t in derived if t is not None)
        if total != 0:
            out.append(Violation("g-sum", None, f"sum of g over vertices is {total}"))
    return out


def design_from_half_edges(graph: Graph, half: Mapping[tuple[int, int], CohesiveEnd]) -> AssemblyDesign:
    bad = check_half_edges(graph, half)
    if bad:
        raise InputError("; ".join(map(str, bad)))
    labels = {}
    for u, v in graph.edge_list:
        a = half[(u, v)]
        labels[(u, v)] = (a.bond, v if a.hatted else u)
    return AssemblyDesign(graph, labels)


@dataclass(frozen=True)
class AssemblingPot:
    pot: Pot
    multiplicity: dict[TileType, int]
    assignment: tuple[TileType, ...]


def assembling_pot(d: AssemblyDesign) -> AssemblingPot:
    bad = check_assembly(d)
    if bad:
        raise InputError("invalid assembly design: " + "; ".join(map(str, bad)))
    tiles = [t for t in d.tiles() if t is not None]
    mult = Counter(tiles)
    return AssemblingPot(Pot(tiles), dict(sorted(mult.items())), tuple(tiles))


@dataclass(frozen=True)
class Sources:
    mapping: dict[int, int]
    not_single_source: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.not_single_source


def sources(d: AssemblyDesign) -> Sources:
    """Per bond, the unique vertex holding all its unhatted ends, if any."""
    bad = check_assembly(d)
    if bad:
        raise InputError("invalid assembly design: " + "; ".join(map(str, bad)))
    holders: dict[int, set[int]] = {}
    for (_, _), (bond, src) in d.edge_label.items():
        holders.setdefault(bond, set()).add(src)
    mapping = {}
    failing = []
    for b in sorted(holders):
        if len(holders[b]) == 1:
            mapping[b] = next(iter(holders[b]))
        else:
            failing.append(b)
    return Sources(mapping, tuple(failing))


# ------------------------------------------------------------- text formats


_END_RE = re.compile(r"\s*(\^?)\s*([a-z]\d*)\s*$")


def parse_tile(text: str, line: int | None = None) -> TileType:
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise InputError(f"tile must be written {{...}}, got {s!r}", line=line)
    body = s[1:-1].strip()
    if not body:
        raise InputError("empty tile", line=line)
    ends = []
    for part in body.split(","):
        m = _END_RE.match(part)
        if not m:
            raise InputError(f"bad cohesive end {part.strip()!r}", line=line)
        ends.append(CohesiveEnd(parse_bond(m.group(2)), bool(m.group(1))))
    return TileType(ends)


def parse_pot(text: str) -> Pot:
    """One tile per line, ``{a,a,^b}``; ``#`` starts a comment."""
    tiles = []
    for i, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        try:
            tiles.append(parse_tile(s, line=i))
        except InputError as exc:
            if exc.line is None:
                raise InputError(str(exc), line=i) from None
            raise
    if not tiles:
        raise InputError("pot file contains no tiles")
    return Pot(tiles)


def render_pot(p: Pot) -> str:
    return "".join(str(t) + "\n" for t in p.tiles)


def pot_to_doc(p: Pot) -> dict:
    return {
        "bonds": [bond_name(b) for b in p.bonds],
        "tiles": [[{"bond": bond_name(e.bond), "hatted": e.hatted} for e in t.ends] for t in p.tiles],
    }


def pot_from_doc(doc: Mapping) -> Pot:
    try:
        names = list(doc["bonds"])
        raw_tiles = list(doc["tiles"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"pot document needs 'bonds' and 'tiles': {exc}") from None
    declared = {parse_bond(n) for n in names}
    tiles = []
    for t in raw_tiles:
        ends = []
        for e in t:
            b = parse_bond(e["bond"])
            if b not in declared:
                raise InputError(f"bond {e['bond']!r} used but not declared")
            ends.append(CohesiveEnd(b, bool(e["hatted"])))
        tiles.append(TileType(ends))
    return Pot(tiles)


def parse_design(graph: Graph, text: str) -> AssemblyDesign:
    """Per-edge lines ``u v bond source_endpoint`` (0-indexed)."""
    labels = {}
    for i, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        parts = s.split()
        if len(parts) != 4:
            raise InputError("expected 'u v bond source'", line=i)
        try:
            u, v, src = int(parts[0]), int(parts[1]), int(parts[3])
        except ValueError:
            raise InputError("vertex ids must be integers", line=i) from None
        e = _norm_edge(u, v)
        if e in labels:
            raise InputError(f"edge {e} labelled twice", line=i)
        labels[e] = (parse_bond(parts[2]), src)
    return AssemblyDesign(graph, labels)


def render_design(d: AssemblyDesign) -> str:
    return "".join(f"{u} {v} {bond_name(b)} {s}\n" for (u, v), (b, s) in sorted(d.edge_label.items()))
