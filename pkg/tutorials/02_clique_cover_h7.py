"""The clique-cover step, worked through on H7 with I2 forbidden.

When a graph has no dominating edge, the search asks whether the graph is
handled by a cover of four cliques. The question is turned into a small
auxiliary graph and handed to a SAT solver.
"""

from hcsearch import CoverContext, PropertySpec, catalog_graph, cover_exists, validate_certificate
from hcsearch.cliquecover import build_neighborhood_classes, describe_classes, to_dimacs

h, p = catalog_graph("H7"), PropertySpec([catalog_graph("I2")])

# Each vertex outside H sees one of these neighbourhoods inside H.
classes = describe_classes(build_neighborhood_classes(h, p, include_full=True))
print(len(classes), "neighbourhood classes")
for i, c in enumerate(classes):
    print(f"  N{i:<2} = {set(c)}")

ctx = CoverContext(h, p)
print("pairs that may both occur:", len(ctx.pairs))
print("classes joined to the apex vertices:", sorted(ctx.apex_links))

# k counts the apex vertices. The cover survives up to k=1.
for k in range(4):
    print(f"k={k}: cover exists = {ctx.decide(k)}")

aux = ctx.auxiliary(1)
cert = cover_exists(aux)
print("certificate valid:", validate_certificate(aux, cert), "surplus:", cert.surplus(h.n))
for q in cert.cliques:
    print("  ", sorted(q))

# The CNF is plain DIMACS if you want to feed another solver.
print(to_dimacs(aux).splitlines()[0])
