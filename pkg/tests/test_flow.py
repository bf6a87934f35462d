"""Max-flow, bipartite MIS, and the neighborhood-ratio minimizer."""

import random
from fractions import Fraction

import pytest

from _helpers import random_graph
from indeplib.flow import (
    INF,
    FlowNetwork,
    bipartite_mis,
    max_flow,
    min_ratio_subset,
    min_ratio_subset_by_difference,
    min_ratio_subset_exhaustive,
)
from indeplib.graph import complete_bipartite, cycle_graph, is_bipartite, path_graph
from indeplib.oracles import alpha_exact


def test_max_flow_simple():
    net = FlowNetwork(4, 0, 3)
    net.add_arc(0, 1, 3)
    net.add_arc(0, 2, 2)
    net.add_arc(1, 3, 2)
    net.add_arc(2, 3, 3)
    net.add_arc(1, 2, 5)
    value, cut = max_flow(net)
    assert value == 5
    assert cut.value == 5
    assert 0 in cut.source_side and 3 not in cut.source_side


def test_max_flow_inf_arcs_and_unbounded():
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, 5)
    net.add_arc(1, 2, INF)
    value, cut = max_flow(net)
    assert value == 5 and cut.source_side == {0}

    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, INF)
    net.add_arc(1, 2, INF)
    with pytest.raises(ValueError, match="no finite cut"):
        max_flow(net)


def test_max_flow_rejects_bad_arcs():
    net = FlowNetwork(3, 0, 2)
    with pytest.raises(ValueError):
        net.add_arc(1, 0, 1)  # into source
    with pytest.raises(ValueError):
        net.add_arc(2, 1, 1)  # out of sink
    with pytest.raises(ValueError):
        net.add_arc(0, 1, -2)


def test_max_flow_returns_maximal_cut_side():
    # two min cuts exist; the maximal source side must be returned
    net = FlowNetwork(4, 0, 3)
    net.add_arc(0, 1, 1)
    net.add_arc(1, 2, 1)
    net.add_arc(2, 3, 1)
    value, cut = max_flow(net)
    assert value == 1
    assert cut.source_side == {0, 1, 2}


def test_bipartite_mis_even_cycle_and_star():
    g = cycle_graph(6)
    coloring = is_bipartite(g)
    size, witness = bipartite_mis(g, coloring)
    assert size == 3 and g.is_independent(witness)
    g = complete_bipartite(2, 5)
    size, witness = bipartite_mis(g, is_bipartite(g))
    assert size == 5 and witness == {2, 3, 4, 5, 6}


def test_bipartite_mis_rejects_bad_coloring():
    g = path_graph(3)
    with pytest.raises(ValueError):
        bipartite_mis(g, [0, 0, 1])
    with pytest.raises(ValueError):
        bipartite_mis(g, [0, 2, 0])


def test_bipartite_mis_random_vs_alpha():
    rng = random.Random(9)
    done = 0
    while done < 60:
        g = random_graph(rng.randint(1, 12), rng.random() * 0.5, rng)
        coloring = is_bipartite(g)
        if coloring is None:
            continue
        size, witness = bipartite_mis(g, coloring)
        assert size == alpha_exact(g)[0]
        assert g.is_independent(witness) and len(witness) == size
        done += 1


def test_min_ratio_examples():
    # one side of K_{3,3}: every vertex sees the full other side
    nbr = {v: {"a", "b", "c"} for v in range(3)}
    subset, nu = min_ratio_subset(range(3), nbr)
    assert nu == 1 and subset == {0, 1, 2}
    # vertex with empty neighborhood gives ratio zero
    nbr = {0: {"a"}, 1: set(), 2: {"b"}}
    subset, nu = min_ratio_subset(range(3), nbr)
    assert nu == 0 and subset == {1}
    # pendant structure: nu = 1/3 from the three leaves of a star
    nbr = {v: {"c"} for v in range(3)}
    subset, nu = min_ratio_subset(range(3), nbr)
    assert nu == Fraction(1, 3) and subset == {0, 1, 2}


def test_min_ratio_input_validation():
    with pytest.raises(ValueError):
        min_ratio_subset([], {})
    with pytest.raises(ValueError):
        min_ratio_subset([0, 1], {0: {1}, 1: {0}})  # ground set overlaps S


def test_min_ratio_vs_exhaustive_randomized():
    rng = random.Random(13)
    for _ in range(300):
        ns = rng.randint(1, 7)
        nc = rng.randint(1, 6)
        svars = list(range(ns))
        ground = [f"c{j}" for j in range(nc)]
        nbr = {
            v: {c for c in ground if rng.random() < rng.choice([0.2, 0.5, 0.8])}
            for v in svars
        }
        got = min_ratio_subset(svars, nbr)
        want = min_ratio_subset_exhaustive(svars, nbr)
        assert got == want, (nbr, got, want)
        # the difference recursion only upper-bounds the true minimum; it
        # must still report the honest ratio of the subset it returns
        diff = min_ratio_subset_by_difference(svars, nbr)
        if diff is not None:
            sub, r = diff
            nbrs = set().union(*(nbr[v] for v in sub))
            assert r == Fraction(len(nbrs), len(sub))
            assert r >= want[1], (nbr, diff, want)


def test_min_ratio_returns_maximal_minimizer():
    # both {0} and {1} minimize at ratio 1; the maximal minimizer is {0,1}
    nbr = {0: {"a"}, 1: {"b"}}
    subset, nu = min_ratio_subset([0, 1], nbr)
    assert nu == 1 and subset == {0, 1}
