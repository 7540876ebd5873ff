import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graphs, random_connected_graph
from oracles import brute_swap_witnesses
from tilepot.errors import InputError
from tilepot.families import generate, kneser, rook
from tilepot.graph import complete, cycle
from tilepot.iso import are_isomorphic
from tilepot.swap import (
    MULTIEDGE,
    Reconnection,
    SwapMove,
    SwapStatus,
    apply_swap,
    is_unswappable,
    proxy_swap_candidates,
)

CROSS, PARALLEL = Reconnection.CROSS, Reconnection.PARALLEL


def test_apply_swap_c4():
    c4 = cycle(4)
    # both new edges {0,3}, {1,2} are already present: the result is the
    # doubled matching {0,3}, {1,2}, which is a multigraph
    move = SwapMove((0, 1), (2, 3), CROSS)
    assert set(move.new_edges()) == {(0, 3), (1, 2)}
    assert apply_swap(c4, move) == MULTIEDGE
    par = apply_swap(c4, SwapMove((0, 1), (2, 3), PARALLEL))
    assert are_isomorphic(par, c4)[0]


def test_apply_swap_multiedge_k4():
    k4 = complete(4)
    for kind in Reconnection:
        assert apply_swap(k4, SwapMove((0, 1), (2, 3), kind)) == MULTIEDGE


def test_swap_move_validation():
    with pytest.raises(InputError):
        SwapMove((0, 1), (1, 2), CROSS)
    with pytest.raises(InputError):
        apply_swap(cycle(4), SwapMove((0, 2), (1, 3), CROSS))


def test_moves_distinguish_reconnection():
    assert SwapMove((0, 1), (2, 3), CROSS) != SwapMove((0, 1), (2, 3), PARALLEL)


def test_verdict_is_not_a_bool():
    with pytest.raises(TypeError):
        bool(is_unswappable(cycle(4)))


def test_small_graphs_status():
    assert is_unswappable(cycle(3)).status is SwapStatus.TOO_SMALL


@pytest.mark.parametrize(
    "g",
    [generate(kneser(5, 2)), generate(rook(3, 3)), generate(rook(4, 4)), generate(kneser(6, 2)), generate(kneser(7, 2))],
    ids=["petersen", "r33", "r44", "kn62", "kn72"],
)
def test_unswappable_examples(g):
    v = is_unswappable(g)
    assert v.status is SwapStatus.UNSWAPPABLE and v.witness is None


def test_c4_witness_is_parallel_opposite():
    v = is_unswappable(cycle(4))
    assert v.status is SwapStatus.SWAPPABLE
    assert v.witness == SwapMove((0, 1), (2, 3), PARALLEL)
    assert are_isomorphic(apply_swap(cycle(4), v.witness), cycle(4))[0]


def test_proxy_examples(petersen):
    assert proxy_swap_candidates(petersen) == []
    assert SwapMove((0, 1), (2, 3), PARALLEL) in proxy_swap_candidates(cycle(4))


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=4, max_n=7))
def test_exact_checker_matches_brute_force(g):
    v = is_unswappable(g, all_witnesses=True)
    got = sorted((m.e1, m.e2, m.reconnection.value) for m in v.witnesses)
    assert got == sorted(brute_swap_witnesses(g))
    assert v.unswappable == (not got)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=4, max_n=7))
def test_proxy_contains_exact_witnesses(g):
    exact = set(is_unswappable(g, all_witnesses=True).witnesses)
    assert exact <= set(proxy_swap_candidates(g))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=4, max_n=8))
def test_swap_preserves_degrees(g):
    from tilepot.swap import disjoint_pairs

    for e1, e2 in list(disjoint_pairs(g))[:20]:
        for kind in Reconnection:
            h = apply_swap(g, SwapMove(e1, e2, kind))
            if h != MULTIEDGE:
                assert sorted(h.degrees()) == sorted(g.degrees()) and h.m == g.m


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=4, max_n=8), st.randoms(use_true_random=False))
def test_unswappability_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert is_unswappable(g).status == is_unswappable(g.relabel(perm)).status


def test_proxy_false_positive_census():
    """Proxy reports candidates that are not isomorphisms; count them on a
    corpus (the proxy is a heuristic, the exact checker is not)."""
    rng = random.Random(11)
    false_pos = 0
    for _ in range(150):
        g = random_connected_graph(rng, rng.randint(4, 7), 0.5)
        exact = set(is_unswappable(g, all_witnesses=True).witnesses)
        proxy = set(proxy_swap_candidates(g))
        assert exact <= proxy
        false_pos += len(proxy - exact)
    print(f"proxy false positives on corpus: {false_pos}")
