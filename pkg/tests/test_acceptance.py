"""Acceptance criteria, one test each. Every test records a PASS/FAIL line
(printed in the terminal summary) before asserting."""

import itertools
import random
import time
from collections import Counter
from math import comb

from conftest import ACCEPTANCE_LINES
from helpers import random_connected_graph
from oracles import all_orientations, brute_spanning_trees, brute_strongly_connected
from test_cover import PETERSEN_COVER, R33_POT, R33_POT_AS_PRINTED_6TH
from test_pot import PETERSEN_TILES
from tilepot.cover import (
    OrientedCover,
    certify_scenario3,
    derive_pot,
    design_pipeline,
    is_neighborhood_independent,
    is_vertex_cover,
)
from tilepot.families import AP6_EXAMPLE_COLUMNS, AP6_EXAMPLE_ROWS, FamilySpec, family_cover, generate, kneser, rook
from tilepot.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    induced_subgraph,
    is_connected,
    is_strongly_connected,
    is_two_edge_connected,
    spanning_tree_count,
    strong_orientation,
)
from tilepot.iso import are_isomorphic, canonical_form
from tilepot.pot import g_value, parse_pot, pot_isomorphism
from tilepot.swap import MULTIEDGE, apply_swap, is_unswappable, proxy_swap_candidates
from tilepot.validator import validate_scenario3


def record(num, checks, elapsed, limit=None):
    """checks: list of (description, ok)."""
    ok = all(c for _, c in checks) and (limit is None or elapsed <= limit)
    failed = [d for d, c in checks if not c]
    if limit is not None and elapsed > limit:
        failed.append(f"runtime {elapsed:.1f}s > {limit}s")
    tail = f" ({elapsed:.1f}s)" + (": failed " + "; ".join(failed) if failed else "")
    ACCEPTANCE_LINES.append(f"criterion {num}: {'PASS' if ok else 'FAIL'}{tail}")
    print(ACCEPTANCE_LINES[-1])
    return ok, failed


def test_criterion_1_unswappability():
    t = time.perf_counter()
    checks = []
    for name, g in [
        ("Petersen", generate(kneser(5, 2))),
        ("R33", generate(rook(3, 3))),
        ("R44", generate(rook(4, 4))),
        ("Kn(6,2)", generate(kneser(6, 2))),
        ("Kn(7,2)", generate(kneser(7, 2))),
    ]:
        checks.append((f"{name} unswappable", is_unswappable(g).unswappable))
    for name, g in [("C4", cycle(4)), ("C6", cycle(6)), ("K44", complete_bipartite(4, 4))]:
        v = is_unswappable(g)
        ok = not v.unswappable and v.witness is not None
        if ok:
            h = apply_swap(g, v.witness)
            ok = h != MULTIEDGE and are_isomorphic(g, h)[0]
        checks.append((f"{name} swappable with verified witness", ok))
    ok, failed = record(1, checks, time.perf_counter() - t, 60)
    assert ok, failed


def test_criterion_2_rook_exactness():
    t = time.perf_counter()
    checks = []
    for m, n in itertools.product((4, 5), repeat=2):
        r = design_pipeline(generate(rook(m, n)))
        checks.append((f"R{m}{n} T3 lower = {m * n} exact", (r.t3_lower.value, r.t3_lower.exact) == (m * n, True)))
        checks.append((f"R{m}{n} certified", r.certificate is not None and r.certificate.certified))
        checks.append((f"R{m}{n} B3 = {m * n - min(m, n)}", r.b3_exact == m * n - min(m, n)))
        cov = family_cover(rook(m, n)).cover
        checks.append((f"R{m}{n} diagonal-complement cover used", tuple(r.cover) == tuple(sorted(cov))))
    ok, failed = record(2, checks, time.perf_counter() - t, 300)
    assert ok, failed


def test_criterion_3_kneser_exactness():
    t = time.perf_counter()
    checks = []
    for n in (6, 7):
        r = design_pipeline(generate(kneser(n, 2)))
        checks.append((f"Kn({n},2) certified", r.certificate is not None and r.certificate.certified))
        checks.append((f"Kn({n},2) B3 = {comb(n - 1, 2)}", r.b3_exact == comb(n - 1, 2)))
        checks.append((f"Kn({n},2) T3 = {comb(n, 2)}", r.t3_exact == comb(n, 2)))
    r = design_pipeline(generate(kneser(9, 3)))
    checks.append(("Kn(9,3) B3 >= 56 bound", r.b3_lower.value == 56 and not r.b3_lower.exact))
    checks.append(("Kn(9,3) T3 = 84 exact", (r.t3_lower.value, r.t3_lower.exact, r.t3_exact) == (84, True, 84)))
    checks.append(("Kn(9,3) no certification attempted", r.certificate is None and any("skipped" in s for s in r.notes)))
    ok, failed = record(3, checks, time.perf_counter() - t, 300)
    assert ok, failed


def _balanced(pot):
    ends = Counter(e for tile in pot.tiles for e in tile.ends)
    return all(ends[e] == ends[e.complement()] for e in ends)


def test_criterion_4_pot_reproduction():
    t = time.perf_counter()
    checks = []
    pg = generate(kneser(5, 2))
    at = {lab: v for v, lab in enumerate(pg.labels)}
    arcs = [("{1,2}", "{3,4}"), ("{1,3}", "{2,4}"), ("{1,4}", "{2,3}")]
    oc = OrientedCover([at[s] for s in PETERSEN_COVER], [(at[a], at[b]) for a, b in arcs])
    listing = parse_pot("\n".join(PETERSEN_TILES.values()))
    checks.append(("Petersen pot matches listing", pot_isomorphism(derive_pot(pg, oc).pot, listing) is not None))
    r33 = generate(rook(3, 3))
    fc = family_cover(rook(3, 3))
    got = derive_pot(r33, OrientedCover(fc.cover, fc.arcs)).pot
    checks.append(("R33 pot has 9 tiles", len(got) == 9))
    checks.append(("R33 pot matches listing (6th tile as forced by the orientation)", pot_isomorphism(got, R33_POT) is not None))
    # the listing as printed cannot come from any design: its ends do not balance
    printed = parse_pot("\n".join(str(x) for x in R33_POT.tiles if str(x) != "{r,r,r,^n}") + "\n" + str(R33_POT_AS_PRINTED_6TH))
    checks.append(("R33 literal 6th tile is unbalanced", not _balanced(printed) and _balanced(R33_POT)))
    ok, failed = record(4, checks, time.perf_counter() - t)
    assert ok, failed


def test_criterion_5_counterexamples():
    checks = []
    t0 = time.perf_counter()
    rep = validate_scenario3(parse_pot("{a,a,a}\n{a,^a,^a}"), complete(4))
    t1 = time.perf_counter() - t0
    checks.append(("K4 pot invalid, order-4 counterexample", rep.scenario3_ok is False and rep.counterexample.order == 4))
    checks.append((f"K4 run {t1:.1f}s <= 120s", t1 <= 120))
    cube = generate(FamilySpec("cube"))
    t0 = time.perf_counter()
    pot = derive_pot(cube, OrientedCover([0, 3, 5, 6])).pot
    rep = validate_scenario3(pot, cube)
    t2 = time.perf_counter() - t0
    cx = rep.counterexample
    checks.append((
        "Q3 pot invalid with K33 at order 6",
        rep.scenario3_ok is False and cx is not None and cx.order == 6 and cx.is_simple()
        and are_isomorphic(cx.graph(), complete_bipartite(3, 3))[0],
    ))
    checks.append((f"Q3 run {t2:.1f}s <= 120s", t2 <= 120))
    ok, failed = record(5, checks, t1 + t2)
    assert ok, failed


def test_criterion_6_neighborhood_independence():
    t = time.perf_counter()
    checks = []
    co = generate(FamilySpec("cuboctahedron"))
    checks.append(("cuboctahedron independent", is_neighborhood_independent(co, range(8)).independent))
    ap = generate(FamilySpec("antiprism", (6,)))
    ind = is_neighborhood_independent(ap, AP6_EXAMPLE_ROWS)
    checks.append(("Ap6 dependent", not ind.independent))
    if not ind.independent:
        combo = ind.combination()
        vec = [combo.get(v, 0) for v in AP6_EXAMPLE_COLUMNS]
        checks.append(("Ap6 coefficients proportional to (1,-1,-1,1)", vec in ([1, -1, -1, 1], [-1, 1, 1, -1])))
    ok, failed = record(6, checks, time.perf_counter() - t)
    assert ok, failed


def _regular_classes(max_n):
    reps = {}
    for n in range(2, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            es = [p for i, p in enumerate(pairs) if mask >> i & 1]
            deg = Counter(x for e in es for x in e)
            if len({deg[v] for v in range(n)}) != 1:
                continue
            reps.setdefault((n, canonical_form(n, {e: 1 for e in es}, [0] * n)), Graph(n, es))
    return list(reps.values())


def test_criterion_7_oracle_equivalence():
    t = time.perf_counter()
    checks = []
    rng = random.Random(2024)

    # (a) spanning trees
    bad = 0
    for _ in range(250):
        g = random_connected_graph(rng, rng.randint(1, 6), rng.choice((0.3, 0.5, 0.8)))
        bad += spanning_tree_count(g) != brute_spanning_trees(g)
    checks.append((f"7a spanning trees ({bad} violations / 250)", bad == 0))

    # (b) strong orientations, then Robbins' converse on every graph n <= 5
    bad = found = 0
    while found < 100:
        g = random_connected_graph(rng, rng.randint(3, 10), 0.5)
        if not is_two_edge_connected(g)[0]:
            continue
        found += 1
        o = strong_orientation(g)
        bad += not (is_strongly_connected(o) and brute_strongly_connected(g.n, o.arcs))
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            strong = any(brute_strongly_connected(n, a) for a in all_orientations(g))
            bad += is_two_edge_connected(g)[0] != strong
    checks.append((f"7b orientations ({bad} violations)", bad == 0))

    # (c) every certified (G, K, O) with G regular on <= 6 vertices (one graph
    # per isomorphism class), every cover and every strong orientation of the
    # induced subgraph; pots equal up to bond renaming are validated once
    bad = certified = distinct = 0
    for g in _regular_classes(6):
        seen = {}
        for r in range(g.n + 1):
            for cover in itertools.combinations(range(g.n), r):
                if not is_vertex_cover(g, cover)[0]:
                    continue
                sub, keep = induced_subgraph(g, cover)
                for arcs in all_orientations(sub):
                    if not brute_strongly_connected(sub.n, arcs):
                        continue
                    oc = OrientedCover(cover, [(keep[a], keep[b]) for a, b in arcs])
                    if not certify_scenario3(g, oc).certified:
                        continue
                    certified += 1
                    pot = derive_pot(g, oc).pot
                    bucket = seen.setdefault(tuple(sorted((len(x), g_value(x)) for x in pot.tiles)), [])
                    if any(pot_isomorphism(pot, q) is not None for q in bucket):
                        continue
                    bucket.append(pot)
                    distinct += 1
                    rep = validate_scenario3(pot, g, connected_only=is_connected(g))
                    bad += rep.scenario3_ok is not True
    checks.append((f"7c certified triples validated ({certified} triples, {distinct} pots, {bad} violations)", bad == 0 and certified > 0))

    # (d) proxy contains every exact witness
    bad = 0
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(4, 7), rng.choice((0.4, 0.6)))
        exact = set(is_unswappable(g, all_witnesses=True).witnesses)
        bad += not exact <= set(proxy_swap_candidates(g))
    checks.append((f"7d proxy superset ({bad} violations / 200)", bad == 0))

    ok, failed = record(7, checks, time.perf_counter() - t)
    assert ok, failed


def test_criterion_8_scope_note():
    """Order-9/10 pots are not brute-forced; they rest on the certificate plus
    a capped enumeration. Check both hold for R33 and that the cap is reported."""
    t = time.perf_counter()
    checks = []
    r33 = generate(rook(3, 3))
    fc = family_cover(rook(3, 3))
    oc = OrientedCover(fc.cover, fc.arcs)
    cert = certify_scenario3(r33, oc)
    checks.append(("R33 certified", cert.certified))
    rep = validate_scenario3(derive_pot(r33, oc).pot, r33, max_order=6)
    checks.append(("R33 capped enumeration (<= 6) clean and flagged as capped", rep.scenario3_ok is True and bool(rep.notes)))
    ok, failed = record(8, checks, time.perf_counter() - t)
    assert ok, failed
