import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graphs, random_connected_graph
from oracles import (
    all_orientations,
    brute_bridges,
    brute_spanning_trees,
    brute_strongly_connected,
    deletion_contraction,
)
from tilepot.errors import InputError, PreconditionError
from tilepot.families import generate, kneser
from tilepot.graph import (
    Graph,
    Orientation,
    complete,
    complete_bipartite,
    count_distinct_neighbor_sets,
    cycle,
    find_bridges,
    induced_subgraph,
    is_connected,
    is_strongly_connected,
    is_two_edge_connected,
    neighbor_set,
    path,
    spanning_tree_count,
    strong_orientation,
)
from tilepot.iso import are_isomorphic

# frozen from the deletion-contraction oracle in oracles.py
PETERSEN_TREES = 2000
K4_TREES = 16


def test_graph_rejects_loops_duplicates_and_range():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_neighbor_sets(petersen):
    assert neighbor_set(cycle(4), 0) == {1, 3}
    assert neighbor_set(complete(4), 2) == {0, 1, 3}
    v = petersen.labels.index("{1,2}")
    assert {petersen.label(w) for w in neighbor_set(petersen, v)} == {"{3,4}", "{3,5}", "{4,5}"}
    with pytest.raises(InputError):
        neighbor_set(cycle(4), 4)


def test_distinct_neighbor_sets(petersen):
    assert count_distinct_neighbor_sets(petersen) == 10
    assert count_distinct_neighbor_sets(complete(4)) == 4
    assert count_distinct_neighbor_sets(complete_bipartite(2, 3)) == 2


def test_spanning_tree_examples(petersen):
    assert spanning_tree_count(cycle(4)) == 4
    assert spanning_tree_count(complete(4)) == K4_TREES
    assert spanning_tree_count(petersen) == PETERSEN_TREES
    assert deletion_contraction(10, sorted(petersen.edges)) == PETERSEN_TREES
    assert spanning_tree_count(Graph(1)) == 1
    assert spanning_tree_count(Graph(3, [(0, 1)])) == 0


def test_spanning_trees_large_exact():
    # Cayley: n^(n-2), far beyond double precision
    assert spanning_tree_count(complete(25)) == 25**23


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_spanning_trees_match_enumeration(g):
    assert spanning_tree_count(g) == brute_spanning_trees(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8), st.randoms(use_true_random=False))
def test_spanning_trees_isomorphism_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert spanning_tree_count(g.relabel(perm)) == spanning_tree_count(g)


def test_connectivity_examples(petersen):
    assert is_connected(petersen)
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert not is_connected(Graph(3))
    assert is_connected(Graph(1))


def test_two_edge_connected_examples():
    assert is_two_edge_connected(cycle(4)) == (True, [])
    ok, bridges = is_two_edge_connected(path(3))
    assert not ok and bridges == [(0, 1), (1, 2)]
    ok, bridges = is_two_edge_connected(generate(kneser(4, 2)))
    assert not ok and len(bridges) == 3


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_bridges_match_oracle(g):
    assert find_bridges(g) == brute_bridges(g)


def test_strong_orientation_examples():
    o = strong_orientation(cycle(4))
    assert is_strongly_connected(o)
    succ = o.successors()
    assert all(len(s) == 1 for s in succ)
    assert is_strongly_connected(strong_orientation(complete(4)))
    with pytest.raises(PreconditionError) as exc:
        strong_orientation(path(3))
    assert exc.value.witness in {(0, 1), (1, 2)}


def test_strongly_connected_examples():
    c4 = cycle(4)
    cyc = Orientation(c4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_strongly_connected(cyc)
    assert not is_strongly_connected(Orientation(c4, [(1, 0), (1, 2), (2, 3), (3, 0)]))


def test_petersen_cover_orientation_not_strong(petersen):
    # the example cover {12,34,13,24,14,23} induces three disjoint edges
    names = ["{1,2}", "{3,4}", "{1,3}", "{2,4}", "{1,4}", "{2,3}"]
    idx = [petersen.labels.index(s) for s in names]
    sub, keep = induced_subgraph(petersen, idx)
    at = {old: new for new, old in enumerate(keep)}
    arcs = [(at[idx[0]], at[idx[1]]), (at[idx[2]], at[idx[3]]), (at[idx[4]], at[idx[5]])]
    assert not is_strongly_connected(Orientation(sub, arcs))


def test_orientation_must_cover_edges():
    with pytest.raises(InputError):
        Orientation(cycle(3), [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        Orientation(cycle(3), [(0, 1), (1, 0), (1, 2), (2, 0)])


def test_strong_orientation_random_two_edge_connected():
    rng = random.Random(7)
    found = 0
    while found < 100:
        g = random_connected_graph(rng, rng.randint(3, 10), 0.5)
        if not is_two_edge_connected(g)[0]:
            continue
        found += 1
        o = strong_orientation(g)
        assert is_strongly_connected(o)
        assert brute_strongly_connected(g.n, o.arcs)


def test_robbins_converse_exhaustive():
    # every graph on up to 5 vertices with at most 8 edges
    checked = 0
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for m in range(0, min(8, len(pairs)) + 1):
            for edges in itertools.combinations(pairs, m):
                g = Graph(n, edges)
                ok = is_two_edge_connected(g)[0]
                strong = any(brute_strongly_connected(n, arcs) for arcs in all_orientations(g))
                assert ok == strong, (n, edges)
                checked += 1
    assert checked > 1000


def test_induced_subgraph_examples():
    kn62 = generate(kneser(6, 2))
    omit = [v for v in range(kn62.n) if "6" not in kn62.labels[v]]
    sub, _ = induced_subgraph(kn62, omit)
    assert are_isomorphic(sub, generate(kneser(5, 2)))[0]
    g = cycle(5)
    sub, keep = induced_subgraph(g, range(5))
    assert sub == g and keep == list(range(5))
    one, _ = induced_subgraph(g, [3])
    assert one.n == 1 and one.m == 0
    with pytest.raises(InputError):
        induced_subgraph(g, [7])


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=8))
def test_induced_full_is_identity(g):
    assert induced_subgraph(g, range(g.n))[0] == g
