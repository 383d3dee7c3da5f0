"""Running the extension search on a few small arrows.

An arrow ``H -> I`` says: every graph with no stable set of size three that
contains H either contains I or can be dealt with directly. The search
starts at H and keeps adding one vertex at a time until every branch is
closed.
"""

from hcsearch import LabeledGraph, PropertySpec, catalog_graph, run_basic, run_full
from hcsearch.graph import choose_dominating_edge, has_stable_triple

# Graphs carry labels 1..n. Here is the 5-cycle, built by hand.
c5 = LabeledGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
print("C5 edges:", [tuple(e) for e in c5.edges()])
print("stable triple?", has_stable_triple(c5))
print("dominating edge:", choose_dominating_edge(c5))  # None: C5 has no dominating edge

# The catalog holds every named graph used by the proof forest.
h, target = catalog_graph("K23c"), catalog_graph("I4")
out = run_full(h, PropertySpec([target]))
print("K23c -> I4:", out.status.value, out.added_count, out.weight)  # Success 2 544

# A bare graph works as the property too.
out = run_full(catalog_graph("I12"), catalog_graph("I1"))
print("I12 -> I1:", out.added_count, out.weight)  # 7 5248

# The trace lists every push and pop, with sizes and running weight.
for event in out.trace[:6]:
    print("  ", event)

# run_basic only branches on dominating edges and fails on the first graph
# without one. H7 has none, so only run_full gets anywhere.
basic = run_basic(catalog_graph("H7"), catalog_graph("I2"))
full = run_full(catalog_graph("H7"), catalog_graph("I2"))
print("H7 -> I2 basic:", basic.status.value, " full:", full.status.value, full.added_count, full.weight)

# Budgets stop a run once its weight would pass the limit.
capped = run_full(catalog_graph("I12"), catalog_graph("I1"), budget=1000)
print("capped:", capped.status.value, capped.weight)
