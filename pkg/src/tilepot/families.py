"""Generators for the named graph families, their closed-form covers, and the
known formula values for B3 / T3.

Every generated graph carries its :class:`FamilySpec` in ``Graph.family`` so
that later stages can use the family's closed-form vertex cover.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import InputError
from .graph import Graph

KINDS = ("rook", "kneser", "cycle", "complete", "cube", "antiprism", "cuboctahedron")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        k, p = self.kind, self.params
        if k not in KINDS:
            raise InputError(f"unknown family {k!r}")
        arity = {"rook": 2, "kneser": 2, "cycle": 1, "complete": 1, "cube": 0, "antiprism": 1, "cuboctahedron": 0}[k]
        if len(p) != arity:
            raise InputError(f"family {k} takes {arity} parameters, got {len(p)}")
        if k == "rook" and min(p) < 1:
            raise InputError("rook's graph needs m, n >= 1")
        if k == "kneser" and not (p[0] > p[1] > 0):
            raise InputError("Kneser graph needs n > k > 0")
        if k == "cycle" and p[0] < 3:
            raise InputError("cycle needs n >= 3")
        if k == "complete" and p[0] < 1:
            raise InputError("complete graph needs n >= 1")
        if k == "antiprism" and p[0] < 3:
            raise InputError("antiprism needs n >= 3")

    def __str__(self) -> str:
        return self.kind + ("(" + ",".join(map(str, self.params)) + ")" if self.params else "")


def rook(m: int, n: int) -> FamilySpec:
    return FamilySpec("rook", (m, n))


def kneser(n: int, k: int) -> FamilySpec:
    return FamilySpec("kneser", (n, k))


def _kneser_vertices(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, n + 1), k))


def _set_label(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


# Cuboctahedron numbered so that 0..7 are the cover vertices w1..w8 (an 8-cycle
# in that order) and 8..11 are v1..v4 of the neighbourhood-independence example.
_CUBOCTA_RHO = ((1, 1, 0, 1, 1, 0, 0, 0), (0, 1, 1, 0, 0, 0, 1, 1), (0, 0, 1, 1, 0, 1, 1, 0), (1, 0, 0, 0, 1, 1, 0, 1))


# The antiprism example cover of Ap6 in circulant numbering: rows
# w1..w8 and columns v1..v4 (the complement {0, 3, 6, 9}).
AP6_EXAMPLE_ROWS = (10, 11, 1, 2, 4, 5, 7, 8)
AP6_EXAMPLE_COLUMNS = (0, 3, 9, 6)


def generate(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "rook":
        m, n = p
        cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
        edges = [
            (a, b)
            for a in range(len(cells))
            for b in range(a + 1, len(cells))
            if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]
        ]
        return Graph(len(cells), edges, [f"({i},{j})" for i, j in cells], spec)
    if k == "kneser":
        n, kk = p
        vs = _kneser_vertices(n, kk)
        sets = [set(v) for v in vs]
        edges = [(a, b) for a in range(len(vs)) for b in range(a + 1, len(vs)) if not sets[a] & sets[b]]
        return Graph(len(vs), edges, [_set_label(v) for v in vs], spec)
    if k == "cycle":
        n = p[0]
        return Graph(n, [(i, (i + 1) % n) for i in range(n)], family=spec)
    if k == "complete":
        n = p[0]
        return Graph(n, itertools.combinations(range(n), 2), family=spec)
    if k == "cube":
        # vertex index is the bit string read as a binary number
        edges = [(a, a ^ (1 << bit)) for a in range(8) for bit in range(3) if a < a ^ (1 << bit)]
        return Graph(8, edges, [format(a, "03b") for a in range(8)], spec)
    if k == "antiprism":
        # circulant C_{2n}(1, 2): the zigzag between the two n-cycles
        n = 2 * p[0]
        edges = {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in (1, 2)}
        return Graph(n, edges, family=spec)
    if k == "cuboctahedron":
        edges = [(i, (i + 1) % 8) for i in range(8)]
        for c, rho in enumerate(_CUBOCTA_RHO):
            edges.extend((w, 8 + c) for w in range(8) if rho[w])
        labels = [f"w{i}" for i in range(1, 9)] + [f"v{i}" for i in range(1, 5)]
        return Graph(12, edges, labels, spec)
    raise InputError(f"unknown family {k!r}")


def rook_diagonal(m: int, n: int) -> list[int]:
    """Vertex ids of (i, i), 1 <= i <= min(m, n)."""
    return [(i - 1) * n + (i - 1) for i in range(1, min(m, n) + 1)]


@dataclass(frozen=True)
class FamilyCover:
    cover: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...] | None = None


def family_cover(spec: FamilySpec) -> FamilyCover | None:
    """Closed-form vertex cover, or None (NOT_AVAILABLE) for other families.

    ROOK: everything off the main diagonal; KNESER: subsets avoiding the
    largest element n.  ROOK(3,3) also returns the 6-cycle orientation
    (1,2)->(1,3)->(2,3)->(2,1)->(3,1)->(3,2)->(1,2).
    """
    if spec.kind == "rook":
        m, n = spec.params
        diag = set(rook_diagonal(m, n))
        cover = tuple(v for v in range(m * n) if v not in diag)
        arcs = None
        if (m, n) == (3, 3):
            cyc = [(1, 2), (1, 3), (2, 3), (2, 1), (3, 1), (3, 2)]
            ids = [(i - 1) * 3 + (j - 1) for i, j in cyc]
            arcs = tuple((ids[t], ids[(t + 1) % 6]) for t in range(6))
        return FamilyCover(cover, arcs)
    if spec.kind == "kneser":
        n, k = spec.params
        vs = _kneser_vertices(n, k)
        return FamilyCover(tuple(i for i, v in enumerate(vs) if n not in v))
    return None


def max_independent_size(spec: FamilySpec) -> int | None:
    """Independence number from the family's closed form, where one is known:
    min(m, n) for rook's graphs, C(n-1, k-1) for Kneser graphs with n >= 2k
    (Erdos-Ko-Rado)."""
    if spec.kind == "rook":
        return min(spec.params)
    if spec.kind == "kneser":
        n, k = spec.params
        if n >= 2 * k:
            return comb(n - 1, k - 1)
    return None


@dataclass(frozen=True)
class FormulaValue:
    value: int | None
    exact: bool
    applies: bool
    condition: str

    def describe(self) -> str:
        if not self.applies or self.value is None:
            return f"n/a ({self.condition})"
        return f"{self.value} exact" if self.exact else f">= {self.value}"


@dataclass(frozen=True)
class FormulaOracle:
    spec: FamilySpec
    b3: FormulaValue
    t3: FormulaValue


def formula_oracle(spec: FamilySpec) -> FormulaOracle | None:
    """Published closed forms for B3 / T3 with their hypotheses attached."""
    if spec.kind == "rook":
        m, n = spec.params
        t_ok = m >= 4 and n >= 4
        t3 = FormulaValue(m * n if t_ok else None, True, t_ok, "m, n >= 4")
        # m, n >= 4 gives unswappability; R(3,3) and R(3,n) need it checked separately
        b_ok = m >= 3 and n >= 3
        cond = "m, n >= 3 and unswappable (automatic for m, n >= 4)"
        b3 = FormulaValue(m * n - min(m, n) if b_ok else None, True, b_ok, cond)
        return FormulaOracle(spec, b3, t3)
    if spec.kind == "kneser":
        n, k = spec.params
        ok = k > 1 and n >= 3 * k
        t3 = FormulaValue(comb(n, k) if ok else None, True, ok, "k > 1, n >= 3k")
        if ok and k == 2:
            b3 = FormulaValue(comb(n - 1, 2), True, True, "k = 2, n >= 6")
        else:
            b3 = FormulaValue(comb(n - 1, k) if ok else None, False, ok, "k > 1, n >= 3k (lower bound)")
        return FormulaOracle(spec, b3, t3)
    return None


@dataclass(frozen=True)
class TriangleReport:
    n: int
    k: int
    removed: int
    added_at_least: int
    delta_at_least: int
    slack: int
    holds: bool
    status: str


def kneser_triangle_delta(n: int, k: int, intersections: tuple[int, int] = (1, 1)) -> TriangleReport:
    """Lower bound on the triangle-count change caused by any simple swap in
    Kn(n, k).

    A swap removes two edges on C(n-2k, k) triangles each and adds edges
    {v1,v3}, {v2,v4} whose endpoints meet in ``intersections`` elements; each
    new edge lies on at least C(n-2k+i, k) - 2 triangles.  ``slack`` is
    C(n-2k, k-1), which must exceed 2 for the bound to be positive.  The status is
    ANALYTIC when the bound is positive and COMPUTATION_REQUIRED otherwise.
    """
    if k < 2 or n < 3 * k:
        raise InputError("kneser_triangle_delta needs k >= 2 and n >= 3k")
    if any(not (1 <= i <= k - 1) for i in intersections):
        raise InputError(f"intersection sizes must lie in 1..{k - 1}")
    removed = 2 * comb(n - 2 * k, k)
    added = sum(comb(n - 2 * k + i, k) - 2 for i in intersections)
    delta = added - removed
    slack = comb(n - 2 * k, k - 1)
    return TriangleReport(n, k, removed, added, delta, slack, delta > 0, "ANALYTIC" if delta > 0 else "COMPUTATION_REQUIRED")
