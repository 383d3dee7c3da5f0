import random

import pytest

import oracles
from hcsearch.graph import LabeledGraph, complement, has_stable_triple
from hcsearch.ramsey import Graph6Error, classify_dataset, classify_lines, encode_graph6, parse_graph6


def test_decode_examples():
    assert parse_graph6("@") == LabeledGraph.empty(1)
    assert parse_graph6("A_") == LabeledGraph.complete(2)
    assert parse_graph6("Bw") == LabeledGraph.complete(3)
    assert parse_graph6(">>graph6<<Bw\n") == LabeledGraph.complete(3)
    assert parse_graph6("?") == LabeledGraph.empty(0)


def test_encode_examples():
    assert encode_graph6(LabeledGraph.complete(3)) == "Bw"
    assert encode_graph6(LabeledGraph.complete(2)) == "A_"


@pytest.mark.parametrize("bad, offset", [("B w", 1), ("Bww", 1), ("", 0), ("Bx", 1)])
def test_decode_errors(bad, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(bad)
    assert info.value.offset >= 0


def test_round_trip_random():
    rng = random.Random(3)
    for n in list(range(0, 12)) + [27, 63, 70]:
        g = oracles.random_graph(rng, n, 0.4)
        text = encode_graph6(g)
        assert parse_graph6(text) == g
        assert encode_graph6(parse_graph6(text)) == text


def test_synthetic_fixture(tmp_path):
    path = tmp_path / "g.g6"
    graphs = [LabeledGraph.complete(3), LabeledGraph.cycle(5), LabeledGraph.cycle(6)]
    path.write_text("".join(encode_graph6(g) + "\n" for g in graphs))
    t = classify_dataset(path)
    assert (t.total, t.dominating_edge, t.two_edge_matching, t.neither) == (3, 1, 1, 1)
    assert t.summary_line() == "3 / 3 [1, 1]"


def test_complement_first(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(encode_graph6(complement(LabeledGraph.cycle(5))) + "\n")
    t = classify_dataset(path, complement_first=True)
    assert t.two_edge_matching == 1


def test_empty_and_bad_lines(tmp_path):
    assert classify_lines([]).summary_line() == "0 / 0 [0, 0]"
    t = classify_lines(["Bw\n", "B w\n", "\n", "A_\n"])
    assert t.total == 2 and t.dominating_edge == 2
    assert [lineno for lineno, _ in t.errors] == [2]


def test_tally_is_order_insensitive():
    rng = random.Random(9)
    lines = [encode_graph6(oracles.random_graph(rng, 7, 0.6)) for _ in range(40)]
    a = classify_lines(lines)
    rng.shuffle(lines)
    b = classify_lines(lines)
    assert (a.total, a.dominating_edge, a.two_edge_matching, a.neither) == (
        b.total, b.dominating_edge, b.two_edge_matching, b.neither)


def test_dataset(ramsey_file):
    with open(ramsey_file) as fh:
        for _, line in zip(range(200), fh):
            assert not has_stable_triple(complement(parse_graph6(line)))
    t = classify_dataset(ramsey_file, complement_first=True)
    assert t.summary_line() == "477142 / 477142 [455344, 21798]"
    assert t.neither == 0
