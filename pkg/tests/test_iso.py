import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hcsearch.constructions import catalog_graph, catalog_names
from hcsearch.graph import LabeledGraph, complement
from hcsearch.iso import (
    contains_induced,
    contains_induced_lad,
    contains_induced_through,
    find_induced_backtrack,
    is_set_free,
)
from test_graph import graphs

SMALL_CATALOG = [n for n in catalog_names() if catalog_graph(n).n <= 8]


def test_examples():
    c5 = LabeledGraph.cycle(5)
    assert contains_induced(c5, LabeledGraph.path(4))
    assert not contains_induced(c5, LabeledGraph.complete(3))
    assert not contains_induced(LabeledGraph.complete(4), LabeledGraph.path(3))
    assert contains_induced(c5, LabeledGraph.empty(0))
    assert is_set_free(c5, [LabeledGraph.complete(3), LabeledGraph.empty(3)])


def test_embedding_is_induced():
    host = complement(LabeledGraph.cycle(7))
    pat = complement(LabeledGraph.path(4))
    emb = find_induced_backtrack(host, pat)
    assert emb is not None
    for a in pat.labels:
        for b in pat.labels:
            if a < b:
                assert pat.has_edge(a, b) == host.has_edge(emb[a], emb[b])


@pytest.mark.parametrize("pattern", SMALL_CATALOG)
def test_catalog_patterns_against_oracle(pattern):
    rng = random.Random(hash(pattern) & 0xFFFF)
    p = catalog_graph(pattern)
    hosts = [catalog_graph(h) for h in SMALL_CATALOG if catalog_graph(h).n >= p.n][:5]
    hosts += [oracles.random_graph(rng, 8, 0.7) for _ in range(2)]
    for h in hosts:
        expected = oracles.induced_copy(h, p)
        assert contains_induced(h, p) == expected
        assert contains_induced_lad(h, p) == expected


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7), graphs(max_n=4))
def test_random_against_oracle(host, pattern):
    expected = oracles.induced_copy(host, pattern)
    assert contains_induced(host, pattern) == expected
    assert contains_induced_lad(host, pattern) == expected


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), graphs(max_n=4), st.data())
def test_through_vertex(host, pattern, data):
    if host.n == 0:
        return
    v = data.draw(st.sampled_from(host.labels))
    rest = host.induced(host.full_mask & ~(1 << (v - 1)))
    expected = oracles.induced_copy(host, pattern) and not (
        pattern.n <= rest.n and oracles.induced_copy(rest, pattern)
    )
    if expected:
        assert contains_induced_through(host, pattern, v)
    if not oracles.induced_copy(host, pattern):
        assert not contains_induced_through(host, pattern, v)
