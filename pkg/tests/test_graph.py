import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hcsearch.graph import (
    EdgeKey,
    LabeledGraph,
    MatchKind,
    choose_dominating_edge,
    classify_matching,
    cliques_within,
    complement,
    disjoint_union,
    dominating_edges,
    extend_with_vertex,
    extension_has_stable_triple,
    extension_order,
    has_stable_triple,
    labels_to_mask,
    mask_to_labels,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 4)])


def test_basic_accessors():
    g = LabeledGraph.cycle(5)
    assert g.num_edges() == 5
    assert g.neighbors(1) == (2, 5)
    assert g.has_edge(5, 1) and not g.has_edge(1, 3)
    assert g.edges()[0] == EdgeKey(2, 1)
    assert g.induced(labels_to_mask([1, 2, 3])) == LabeledGraph.path(3)


def test_mask_round_trip():
    assert mask_to_labels(labels_to_mask([5, 1, 3])) == (1, 3, 5)


def test_stable_triple_examples():
    assert has_stable_triple(LabeledGraph.empty(3))
    assert not has_stable_triple(LabeledGraph.complete(5))
    assert not has_stable_triple(LabeledGraph.cycle(5))
    assert has_stable_triple(LabeledGraph.cycle(6))


def test_dominating_edge_examples():
    assert choose_dominating_edge(LabeledGraph.complete(3)) == EdgeKey(2, 1)
    assert dominating_edges(LabeledGraph.cycle(5)) == []
    assert choose_dominating_edge(LabeledGraph.path(4)) == EdgeKey(3, 2)


def test_choice_minimises_the_younger_endpoint():
    # star centred on 4: every edge is dominating; (4, 1) beats (4, 2) and (4, 3)
    g = LabeledGraph.from_edges(4, [(4, 1), (4, 2), (4, 3)])
    assert choose_dominating_edge(g) == EdgeKey(4, 1)


def test_extension_order_small():
    assert extension_order([3, 4, 5]) == [(5,), (4, 5), (4,), (3, 5), (3, 4, 5), (3, 4), (3,), ()]
    assert extension_order([]) == [()]


@pytest.mark.parametrize("n", range(0, 7))
def test_extension_order_matches_pairwise_rule(n):
    ground = range(1, n + 1)
    assert extension_order(ground) == oracles.subsets_in_extension_order(ground)


def test_extension_order_reversed_is_ascending_lex():
    order = extension_order([1, 2, 3, 4])
    assert list(reversed(order)) == sorted(order)
    assert len(set(order)) == 16


def test_extend_with_vertex():
    g = extend_with_vertex(LabeledGraph.complete(2), [2])
    assert g.n == 3 and g.has_edge(3, 2) and not g.has_edge(3, 1)
    with pytest.raises(ValueError):
        extend_with_vertex(g, [7])


def test_complement_examples():
    assert complement(LabeledGraph.complete(3)) == LabeledGraph.empty(3)
    c5 = LabeledGraph.cycle(5)
    assert complement(c5) != c5  # same shape, different labelling
    assert sorted(complement(c5).degree_sequence()) == [2] * 5


def test_disjoint_union_shifts_labels():
    g = disjoint_union(LabeledGraph.path(2), LabeledGraph.path(2))
    assert g.edges() == [EdgeKey(2, 1), EdgeKey(4, 3)]


def test_classify_matching_examples():
    assert classify_matching(LabeledGraph.complete(3)).kind is MatchKind.DOMINATING_EDGE
    c5 = classify_matching(LabeledGraph.cycle(5))
    assert c5.kind is MatchKind.TWO_EDGE_MATCHING
    assert c5.witness == (EdgeKey(2, 1), EdgeKey(4, 3))
    assert classify_matching(LabeledGraph.cycle(6)).kind is MatchKind.NEITHER


def test_cliques_within_lists_every_clique():
    g = LabeledGraph.cycle(4)
    got = sorted(mask_to_labels(m) for m in cliques_within(g, g.full_mask))
    assert got == [(), (1,), (1, 2), (1, 4), (2,), (2, 3), (3,), (3, 4), (4,)]


def test_pickle_round_trip():
    import pickle

    g = LabeledGraph.cycle(7)
    assert pickle.loads(pickle.dumps(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_stable_triple_matches_oracle(g):
    assert has_stable_triple(g) == oracles.stable_triple(g)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_dominating_edges_match_oracle(g):
    assert dominating_edges(g) == oracles.dominating_edges(g)
    expected = oracles.dominating_edges(g)
    assert choose_dominating_edge(g) == (expected[0] if expected else None)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_classification_matches_oracle(g):
    c = classify_matching(g)
    assert c.kind.value == oracles.classify(g)
    if c.kind is MatchKind.TWO_EDGE_MATCHING:
        assert c.witness == oracles.two_edge_matchings(g)[0]


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).num_edges() + g.num_edges() == g.n * (g.n - 1) // 2


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.data())
def test_extension_stable_triple_shortcut(g, data):
    if has_stable_triple(g):
        return
    nbrs = data.draw(st.sets(st.sampled_from(g.labels) if g.n else st.nothing()))
    assert extension_has_stable_triple(g, labels_to_mask(nbrs)) == has_stable_triple(extend_with_vertex(g, nbrs))


def test_no_stable_triple_means_common_non_neighbours_adjacent():
    rng = random.Random(5)
    for _ in range(200):
        g = oracles.random_graph(rng, 7, 0.7)
        if has_stable_triple(g):
            continue
        for a, b, c in combinations(g.labels, 3):
            if not g.has_edge(a, c) and not g.has_edge(b, c):
                assert g.has_edge(a, b)
