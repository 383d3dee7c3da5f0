"""Reading graph6 text and sorting graphs by their small dominating structure.

Each graph with no stable set of size three either has a dominating edge,
has two disjoint adjacent edges that together dominate, or neither.
"""

import tempfile
from pathlib import Path

from hcsearch import LabeledGraph, classify_dataset, classify_matching, complement, parse_graph6
from hcsearch.ramsey import encode_graph6

graphs = {"K3": LabeledGraph.complete(3), "C5": LabeledGraph.cycle(5), "C6": LabeledGraph.cycle(6)}
for name, g in graphs.items():
    text = encode_graph6(g)
    c = classify_matching(g)
    print(f"{name}: graph6 {text!r} -> {c.kind.value} {c.witness or ''}")
    assert parse_graph6(text) == g

# Files of graph6 lines are tallied in one pass.
with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "small.g6"
    path.write_text("".join(encode_graph6(g) + "\n" for g in graphs.values()))
    tally = classify_dataset(path)
    print(tally.summary_line(), "neither:", tally.neither)

# Triangle-free inputs are complemented first, as for the 27-vertex
# Ramsey graphs:  hcsearch check-ramsey r39_27.g6 --complement
tri_free = complement(LabeledGraph.cycle(5))
print(classify_matching(complement(tri_free)).kind.value)
