"""Vertex covers, neighbourhood independence, derived pots and the Scenario-3
certificate, plus the pipeline that strings them together.

The lower bounds only hold for unswappable graphs; the upper bound needs a
k-regular graph with a neighbourhood-independent cover whose induced subgraph
is 2-edge-connected.  When both are available and agree, B3 is determined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError
from .families import family_cover, kneser_triangle_delta, max_independent_size
from .graph import (
    Edge,
    Graph,
    Orientation,
    _norm_edge,
    count_distinct_neighbor_sets,
    induced_subgraph,
    is_strongly_connected,
    is_two_edge_connected,
    strong_orientation,
)
from .linalg import kernel_vector, rank
from .pot import AssemblyDesign, Pot, assembling_pot, check_assembly, sources
from .swap import SwapStatus, SwapVerdict, is_unswappable


def _vertex_set(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    vs = tuple(sorted(set(int(v) for v in vertices)))
    for v in vs:
        g.check_vertex(v)
    return vs


# ----------------------------------------------------------------- covers


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> tuple[bool, Edge | None]:
    """(True, None) if every edge touches ``cover``, else (False, first uncovered edge)."""
    k = set(_vertex_set(g, cover))
    for u, v in g.edge_list:
        if u not in k and v not in k:
            return False, (u, v)
    return True, None


def _clique_cover_bound(masks: Sequence[int], cand: int) -> int:
    """Greedy clique cover size of ``cand``: an upper bound on its independence number."""
    cliques: list[int] = []
    c = cand
    while c:
        v = (c & -c).bit_length() - 1
        c &= c - 1
        for i, q in enumerate(cliques):
            if q & masks[v] == q:
                cliques[i] = q | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def _mis_size(masks: Sequence[int], cand: int, size: int, best: list[int]) -> None:
    """Branch-and-bound for the independence number of the subgraph on ``cand``."""
    while cand:
        # a vertex of degree <= 1 inside cand belongs to some maximum independent set
        low = None
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            if (masks[v] & cand).bit_count() <= 1:
                low = v
                break
        if low is None:
            break
        size += 1
        cand &= ~(masks[low] | (1 << low))
    if size > best[0]:
        best[0] = size
    if not cand or size + _clique_cover_bound(masks, cand) <= best[0]:
        return
    v = max(_bits(cand), key=lambda x: ((masks[x] & cand).bit_count(), -x))
    _mis_size(masks, cand & ~(masks[v] | (1 << v)), size + 1, best)
    _mis_size(masks, cand & ~(1 << v), size, best)


def _bits(x: int) -> list[int]:
    out = []
    while x:
        out.append((x & -x).bit_length() - 1)
        x &= x - 1
    return out


def independence_number(g: Graph) -> int:
    best = [0]
    _mis_size(g.masks, (1 << g.n) - 1, 0, best)
    return best[0]


def _lex_least_cover(g: Graph, alpha: int) -> tuple[int, ...]:
    """Lexicographically least cover of size n - alpha.

    Scans vertices in index order, trying "in the cover" first; a branch is
    cut as soon as it can no longer reach an independent set of size alpha.
    """
    masks = g.masks
    n = g.n

    def go(v: int, indep: int, size: int, allowed: int) -> int | None:
        if size == alpha:
            return indep
        if v == n:
            return None
        rest = allowed & ~((1 << v) - 1)
        if size + _clique_cover_bound(masks, rest) < alpha:
            return None
        if (allowed >> v) & 1:
            found = go(v + 1, indep, size, allowed)
            if found is not None:
                return found
            return go(v + 1, indep | (1 << v), size + 1, allowed & ~masks[v] & ~(1 << v))
        return go(v + 1, indep, size, allowed)

    indep = go(0, 0, 0, (1 << n) - 1)
    assert indep is not None
    return tuple(v for v in range(n) if not (indep >> v) & 1)


@dataclass(frozen=True)
class MinCover:
    cover: tuple[int, ...]
    method: str  # "family" or "search"

    def __len__(self) -> int:
        return len(self.cover)


def min_vertex_cover(g: Graph, *, use_family: bool = True) -> MinCover:
    """A minimum vertex cover.

    For family graphs the closed-form cover is used when its complement is an
    independent set of the known maximum size.  Otherwise an exact
    branch-and-bound gives the independence number and the returned cover is
    the lexicographically least cover of that size.
    """
    spec = g.family
    if use_family and spec is not None:
        fc = family_cover(spec)
        alpha = max_independent_size(spec)
        if fc is not None and alpha is not None and len(fc.cover) == g.n - alpha:
            ok, _ = is_vertex_cover(g, fc.cover)
            if ok:
                return MinCover(tuple(sorted(fc.cover)), "family")
    return MinCover(_lex_least_cover(g, independence_number(g)), "search")


# ------------------------------------------------------------------ bounds


@dataclass(frozen=True)
class Bound:
    """A bound value, or NOT_APPLICABLE when ``value`` is None."""

    value: int | None
    exact: bool = False
    reason: str = ""

    @property
    def applicable(self) -> bool:
        return self.value is not None

    def describe(self) -> str:
        if self.value is None:
            return f"NOT_APPLICABLE ({self.reason})" if self.reason else "NOT_APPLICABLE"
        return f"{self.value}" + (" EXACT" if self.exact else "")

    def to_doc(self) -> dict:
        return {"value": self.value, "exact": self.exact, "applicable": self.applicable, "reason": self.reason}


def _swap_reason(verdict: SwapVerdict) -> str:
    if verdict.status is SwapStatus.TOO_SMALL:
        return "fewer than 4 vertices"
    return f"graph is swappable (witness {verdict.witness.as_pairs()}, {verdict.witness.reconnection.value})"


def b3_lower_bound(g: Graph, verdict: SwapVerdict | None = None, cover: MinCover | None = None) -> Bound:
    """|minimum vertex cover| for an unswappable graph."""
    verdict = verdict if verdict is not None else is_unswappable(g)
    if not verdict.unswappable:
        return Bound(None, reason=_swap_reason(verdict))
    cover = cover if cover is not None else min_vertex_cover(g)
    return Bound(len(cover.cover))


def t3_lower_bound(g: Graph, verdict: SwapVerdict | None = None) -> Bound:
    """Number of distinct neighbour sets for an unswappable graph; EXACT when
    every vertex has its own neighbour set."""
    verdict = verdict if verdict is not None else is_unswappable(g)
    if not verdict.unswappable:
        return Bound(None, reason=_swap_reason(verdict))
    x = count_distinct_neighbor_sets(g)
    return Bound(x, exact=(x == g.n))


# --------------------------------------------------- neighbourhood independence


@dataclass(frozen=True)
class NeighborhoodMatrix:
    """0/1 incidence of non-cover vertices against the cover, duplicates merged.

    ``rows`` lists the cover in ascending order.  Column j is ``columns[j]``
    (one entry per row); it is shared by the vertices ``members[j]``, and the
    columns appear in order of their smallest member.
    """

    rows: tuple[int, ...]
    columns: tuple[tuple[int, ...], ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(m[0] for m in self.members)

    def matrix(self) -> list[list[int]]:
        """Rows indexed by ``rows``, one column per distinct vector."""
        return [[col[i] for col in self.columns] for i in range(len(self.rows))]


def neighborhood_matrix(g: Graph, cover: Iterable[int]) -> NeighborhoodMatrix:
    rows = _vertex_set(g, cover)
    ok, bad = is_vertex_cover(g, rows)
    if not ok:
        raise PreconditionError(f"not a vertex cover: edge {bad} is uncovered", bad)
    kset = set(rows)
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        if v in kset:
            continue
        col = tuple(1 if g.has_edge(v, w) else 0 for w in rows)
        groups.setdefault(col, []).append(v)
    ordered = sorted(groups.items(), key=lambda kv: kv[1][0])
    return NeighborhoodMatrix(rows, tuple(c for c, _ in ordered), tuple(tuple(m) for _, m in ordered))


@dataclass(frozen=True)
class Independence:
    independent: bool
    rank: int
    matrix: NeighborhoodMatrix
    coefficients: tuple[int, ...] | None = None  # aligned with matrix.columns

    def combination(self) -> dict[int, int] | None:
        """Nonzero coefficients keyed by the column's representative vertex."""
        if self.coefficients is None:
            return None
        reps = self.matrix.representatives
        return {reps[j]: c for j, c in enumerate(self.coefficients) if c}


def is_neighborhood_independent(g: Graph, cover: Iterable[int]) -> Independence:
    """Exact rank test of the distinct neighbourhood vectors; when they are
    dependent, integer coefficients of a vanishing combination come back."""
    nm = neighborhood_matrix(g, cover)
    if not nm.columns:
        return Independence(True, 0, nm)
    mat = nm.matrix()
    r = rank(mat) if nm.rows else 0
    if r == len(nm.columns):
        return Independence(True, r, nm)
    coeffs = kernel_vector(mat) if nm.rows else [1] + [0] * (len(nm.columns) - 1)
    assert coeffs is not None
    if next(c for c in coeffs if c) < 0:
        coeffs = [-c for c in coeffs]
    return Independence(False, r, nm, tuple(coeffs))


# -------------------------------------------------------------- derived pot


@dataclass(frozen=True)
class OrientedCover:
    """A vertex cover with an orientation of its induced subgraph, arcs given
    in the graph's own vertex ids."""

    cover: tuple[int, ...]
    arcs: frozenset[Edge] = frozenset()

    def __init__(self, cover: Iterable[int], arcs: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "cover", tuple(sorted(set(int(v) for v in cover))))
        object.__setattr__(self, "arcs", frozenset((int(a), int(b)) for a, b in arcs))

    def problems(self, g: Graph) -> list[str]:
        """Reasons this is not a valid oriented cover of ``g`` (empty if valid)."""
        out = []
        try:
            _vertex_set(g, self.cover)
        except InputError as e:
            return [str(e)]
        ok, bad = is_vertex_cover(g, self.cover)
        if not ok:
            out.append(f"edge {bad} is uncovered")
        k = set(self.cover)
        inner = {e for e in g.edges if e[0] in k and e[1] in k}
        seen = set()
        for a, b in sorted(self.arcs):
            e = _norm_edge(a, b)
            if e not in inner:
                out.append(f"arc {a}->{b} is not an edge inside the cover")
            elif e in seen:
                out.append(f"edge {e} is oriented twice")
            seen.add(e)
        missing = sorted(inner - seen)
        if missing:
            out.append(f"edges inside the cover left unoriented: {missing}")
        return out

    def induced(self, g: Graph) -> tuple[Graph, Orientation, list[int]]:
        """Induced subgraph on the cover, the orientation re-indexed onto it,
        and the new -> old vertex list."""
        sub, keep = induced_subgraph(g, self.cover)
        index = {v: i for i, v in enumerate(keep)}
        return sub, Orientation(sub, [(index[a], index[b]) for a, b in self.arcs]), keep


def oriented_cover(g: Graph, cover: Iterable[int]) -> OrientedCover:
    """Cover with a strong orientation of its induced subgraph (precondition
    error naming a bridge if none exists)."""
    cov = _vertex_set(g, cover)
    sub, keep = induced_subgraph(g, cov)
    o = strong_orientation(sub)
    return OrientedCover(cov, [(keep[a], keep[b]) for a, b in o.arcs])


def naive_oriented_cover(g: Graph, cover: Iterable[int]) -> OrientedCover:
    """Every edge inside the cover oriented low -> high; used when no strong
    orientation exists so that the remaining checks can still run."""
    cov = _vertex_set(g, cover)
    kset = set(cov)
    return OrientedCover(cov, [e for e in g.edge_list if e[0] in kset and e[1] in kset])


@dataclass(frozen=True)
class Derivation:
    pot: Pot
    design: AssemblyDesign
    bond_of: dict[int, int]  # cover vertex -> bond id


def derive_pot(g: Graph, oc: OrientedCover) -> Derivation:
    """Pot derived from (K, O): cover vertex number i (ascending) owns bond i and
    is the source of every edge it sends out of the cover, plus the arcs of O
    that leave it."""
    bad = oc.problems(g)
    if bad:
        raise PreconditionError("invalid oriented cover: " + "; ".join(bad))
    bond_of = {v: i for i, v in enumerate(oc.cover)}
    labels: dict[Edge, tuple[int, int]] = {}
    for u, v in g.edge_list:
        if u in bond_of and v in bond_of:
            src = u if (u, v) in oc.arcs else v
        else:
            src = u if u in bond_of else v
        labels[(u, v)] = (bond_of[src], src)
    design = AssemblyDesign(g, labels)
    return Derivation(assembling_pot(design).pot, design, bond_of)


# ------------------------------------------------------------ certificate


@dataclass
class Scenario3Certificate:
    regularity: int | None
    cover_size: int
    is_cover: bool
    uncovered: Edge | None
    neighborhood_independent: bool | None
    coefficients: dict[int, int] | None
    induced_2ec: bool | None
    bridges: list[Edge]
    orientation_strong: bool | None
    reasons: list[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return not self.reasons

    @property
    def verdict(self) -> str:
        return "CERTIFIED" if self.certified else "NOT_CERTIFIED"

    def to_doc(self) -> dict:
        return {
            "verdict": self.verdict,
            "regularity": self.regularity,
            "cover_size": self.cover_size,
            "vertex_cover": {"pass": self.is_cover, "uncovered_edge": self.uncovered},
            "neighborhood_independent": {
                "pass": self.neighborhood_independent,
                "coefficients": None if self.coefficients is None else {str(k): v for k, v in self.coefficients.items()},
            },
            "induced_two_edge_connected": {"pass": self.induced_2ec, "bridges": [list(b) for b in self.bridges]},
            "orientation_strong": {"pass": self.orientation_strong},
            "reasons": list(self.reasons),
        }


def certify_scenario3(g: Graph, oc: OrientedCover) -> Scenario3Certificate:
    """Check every hypothesis of the upper-bound theorem; failures become reasons."""
    reasons: list[str] = []
    k = g.regularity()
    if k is None:
        reasons.append("graph is not regular")
    if g.m == 0:
        reasons.append("graph has no edges")
    try:
        _vertex_set(g, oc.cover)
    except InputError as e:
        return Scenario3Certificate(k, len(oc.cover), False, None, None, None, None, [], None, reasons + [str(e)])
    is_cov, uncovered = is_vertex_cover(g, oc.cover)
    cert = Scenario3Certificate(k, len(oc.cover), is_cov, uncovered, None, None, None, [], None, reasons)
    if not is_cov:
        reasons.append(f"not a vertex cover: edge {uncovered} is uncovered")
        return cert
    ind = is_neighborhood_independent(g, oc.cover)
    cert.neighborhood_independent = ind.independent
    if not ind.independent:
        cert.coefficients = ind.combination()
        reasons.append(f"cover is not neighbourhood independent: {cert.coefficients}")
    sub, keep = induced_subgraph(g, oc.cover)
    two_ec, bridges = is_two_edge_connected(sub)
    cert.induced_2ec = two_ec
    cert.bridges = [_norm_edge(keep[a], keep[b]) for a, b in bridges]
    if not cert.induced_2ec:
        if bridges:
            reasons.append(f"induced subgraph on the cover has bridge {cert.bridges[0]}")
        else:
            reasons.append("induced subgraph on the cover is not connected")
    orient_problems = [p for p in oc.problems(g) if "uncovered" not in p]
    if orient_problems:
        cert.orientation_strong = False
        reasons.append("orientation invalid: " + "; ".join(orient_problems))
    else:
        _, o, _ = oc.induced(g)
        cert.orientation_strong = is_strongly_connected(o)
        if not cert.orientation_strong:
            reasons.append("orientation of the induced subgraph is not strongly connected")
    return cert


# --------------------------------------------------------------- pipeline


@dataclass
class PipelineReport:
    n: int
    m: int
    regularity: int | None
    swap_status: str
    swap_method: str
    witness: tuple | None
    b3_lower: Bound
    t3_lower: Bound
    cover: tuple[int, ...] | None = None
    cover_method: str | None = None
    arcs: tuple[Edge, ...] | None = None
    certificate: Scenario3Certificate | None = None
    pot: Pot | None = None
    b3_upper: int | None = None
    t3_upper: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def b3_exact(self) -> int | None:
        if self.b3_lower.value is not None and self.b3_upper is not None and self.b3_lower.value == self.b3_upper:
            return self.b3_upper
        return None

    @property
    def t3_exact(self) -> int | None:
        return self.t3_lower.value if self.t3_lower.exact else None

    def to_doc(self) -> dict:
        from .pot import pot_to_doc

        return {
            "n": self.n,
            "m": self.m,
            "regularity": self.regularity,
            "swap": {"status": self.swap_status, "method": self.swap_method, "witness": self.witness},
            "b3": {"lower": self.b3_lower.to_doc(), "upper": self.b3_upper, "exact": self.b3_exact},
            "t3": {"lower": self.t3_lower.to_doc(), "upper": self.t3_upper, "exact": self.t3_exact},
            "cover": None if self.cover is None else {"vertices": list(self.cover), "method": self.cover_method},
            "orientation": None if self.arcs is None else [list(a) for a in self.arcs],
            "certificate": None if self.certificate is None else self.certificate.to_doc(),
            "pot": None if self.pot is None else pot_to_doc(self.pot),
            "notes": list(self.notes),
        }


def _analytic_unswappable(g: Graph) -> bool:
    spec = g.family
    if spec is None or spec.kind != "kneser":
        return False
    n, k = spec.params
    if k < 2 or n < 3 * k:
        return False
    # the bound grows with the intersection sizes, so the all-ones case is the worst
    return kneser_triangle_delta(n, k, (1, 1)).holds


def design_pipeline(g: Graph, *, max_swap_vertices: int = 40, max_certify_vertices: int = 40) -> PipelineReport:
    """Lower bounds, a cover, a strong orientation, the certificate and the
    derived pot, with every failure recorded in ``notes``."""
    notes: list[str] = []
    verdict = None
    if g.n <= max_swap_vertices:
        verdict = is_unswappable(g)
        status, method = verdict.status.value, "exhaustive"
    elif _analytic_unswappable(g):
        verdict = SwapVerdict(SwapStatus.UNSWAPPABLE)
        status, method = verdict.status.value, "analytic (Kneser triangle count)"
    else:
        status, method = "unknown", "skipped"
        notes.append(f"swap check skipped: {g.n} vertices exceeds the limit of {max_swap_vertices}")
    witness = verdict.witness.as_pairs() if verdict is not None and verdict.witness is not None else None
    if verdict is not None and verdict.witness is not None:
        notes.append(f"swappable: {verdict.witness.reconnection.value} swap of {verdict.witness.e1} and {verdict.witness.e2}")

    report = PipelineReport(g.n, g.m, g.regularity(), status, method, witness, Bound(None), Bound(None), notes=notes)

    cover = None
    if g.n <= max_swap_vertices or (g.family is not None and family_cover(g.family) is not None):
        cover = min_vertex_cover(g)
        if cover.method == "search" and g.n > max_swap_vertices:
            notes.append("closed-form cover could not be verified as minimum")
    if verdict is None:
        report.b3_lower = Bound(None, reason="unswappability undecided")
        report.t3_lower = Bound(None, reason="unswappability undecided")
    elif cover is not None:
        report.b3_lower = b3_lower_bound(g, verdict, cover)
        report.t3_lower = t3_lower_bound(g, verdict)
    if cover is None:
        notes.append("no cover computed")
        return report
    report.cover, report.cover_method = cover.cover, cover.method

    if g.n > max_certify_vertices:
        notes.append(f"certification skipped: {g.n} vertices exceeds the limit of {max_certify_vertices}")
        return report
    oc = None
    hint = family_cover(g.family) if g.family is not None else None
    if hint is not None and hint.arcs is not None and tuple(sorted(hint.cover)) == cover.cover:
        cand = OrientedCover(cover.cover, hint.arcs)
        if not cand.problems(g) and is_strongly_connected(cand.induced(g)[1]):
            oc = cand
    if oc is None:
        try:
            oc = oriented_cover(g, cover.cover)
        except PreconditionError as e:
            notes.append(f"no strong orientation: {e}")
            oc = naive_oriented_cover(g, cover.cover)
    report.arcs = tuple(sorted(oc.arcs))
    cert = certify_scenario3(g, oc)
    report.certificate = cert
    if cert.certified:
        d = derive_pot(g, oc)
        assert not check_assembly(d.design) and sources(d.design).ok
        report.pot = d.pot
        report.b3_upper = len(d.pot.bonds)
        report.t3_upper = len(d.pot)
    else:
        notes.extend(f"not certified: {r}" for r in cert.reasons)
    return report
