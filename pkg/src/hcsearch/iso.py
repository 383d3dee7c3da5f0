"""Induced-subgraph containment.

Only the yes/no answer matters to the search, so two interchangeable deciders
are provided: igraph's LAD solver and a bitmask backtracker. Both sit behind
cheap invariant filters.
"""

from __future__ import annotations

import igraph

from .graph import LabeledGraph, _bits


def to_igraph(g: LabeledGraph) -> igraph.Graph:
    if g._igraph is None:
        g._igraph = igraph.Graph(n=g.n, edges=[(e.lo - 1, e.hi - 1) for e in g.edges()])
    return g._igraph


def _quick_reject(host: LabeledGraph, pattern: LabeledGraph) -> bool:
    if pattern.n > host.n:
        return True
    pe = pattern.num_edges()
    he = host.num_edges()
    if pe > he:
        return True
    if pattern.n * (pattern.n - 1) // 2 - pe > host.n * (host.n - 1) // 2 - he:
        return True
    return False


def _search_order(pattern: LabeledGraph) -> list[int]:
    # greedy: most constrained vertex next (most links to placed vertices, then degree)
    n = pattern.n
    deg = [row.bit_count() for row in pattern.adj]
    placed = 0
    order = []
    for _ in range(n):
        best = max(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: ((pattern.adj[v] & placed).bit_count(), deg[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def find_induced_backtrack(host: LabeledGraph, pattern: LabeledGraph, first: int | None = None) -> dict[int, int] | None:
    """Return an induced embedding ``pattern label -> host label`` or None.

    ``first`` optionally pins some pattern vertex to the host vertex with that
    label (used when every copy must touch a given vertex).
    """
    n, m = pattern.n, host.n
    if n == 0:
        return {}
    if _quick_reject(host, pattern):
        return None
    hadj = host.adj
    padj = pattern.adj
    hfull = host.full_mask
    hdeg = [row.bit_count() for row in hadj]
    pdeg = [row.bit_count() for row in padj]
    # candidate masks by degree and co-degree
    base = []
    for p in range(n):
        c = 0
        for h in range(m):
            if hdeg[h] >= pdeg[p] and (m - 1 - hdeg[h]) >= (n - 1 - pdeg[p]):
                c |= 1 << h
        if not c:
            return None
        base.append(c)
    order = _search_order(pattern)
    earlier = [[(order[j], bool(padj[order[k]] >> order[j] & 1)) for j in range(k)] for k in range(n)]
    mapping = [0] * n

    def candidates(k: int, used: int) -> int:
        p = order[k]
        c = base[p] & ~used
        for q, linked in earlier[k]:
            hq = mapping[q]
            c &= hadj[hq] if linked else (hfull & ~hadj[hq] & ~(1 << hq))
            if not c:
                return 0
        return c

    def rec(k: int, used: int) -> bool:
        if k == n:
            return True
        for h in _bits(candidates(k, used)):
            mapping[order[k]] = h
            if rec(k + 1, used | (1 << h)):
                return True
        return False

    if first is None:
        found = rec(0, 0)
    else:
        # some pattern vertex must land on host vertex `first`
        found = False
        fb = 1 << (first - 1)
        for p0 in range(n):
            if not base[p0] & fb:
                continue
            order = [p0] + [v for v in _search_order(pattern) if v != p0]
            earlier = [[(order[j], bool(padj[order[k]] >> order[j] & 1)) for j in range(k)] for k in range(n)]
            mapping[p0] = first - 1
            if rec(1, fb):
                found = True
                break
    if not found:
        return None
    return {p + 1: mapping[p] + 1 for p in range(n)}


def contains_induced_lad(host: LabeledGraph, pattern: LabeledGraph) -> bool:
    if pattern.n == 0:
        return True
    if _quick_reject(host, pattern):
        return False
    if pattern.n == host.n:
        if host.degree_sequence() != pattern.degree_sequence():
            return False
        return to_igraph(host).isomorphic(to_igraph(pattern))
    return to_igraph(host).subisomorphic_lad(to_igraph(pattern), induced=True)


def contains_induced(host: LabeledGraph, pattern: LabeledGraph) -> bool:
    """True iff some vertex subset of ``host`` induces a copy of ``pattern``."""
    if pattern.n == 0:
        return True
    if _quick_reject(host, pattern):
        return False
    if pattern.n == host.n and host.degree_sequence() != pattern.degree_sequence():
        return False
    return find_induced_backtrack(host, pattern) is not None


def contains_induced_through(host: LabeledGraph, pattern: LabeledGraph, vertex: int) -> bool:
    """True iff some induced copy of ``pattern`` in ``host`` uses ``vertex``."""
    if pattern.n == 0:
        return False
    return find_induced_backtrack(host, pattern, first=vertex) is not None


def is_set_free(host: LabeledGraph, forbidden) -> bool:
    """True iff ``host`` contains none of ``forbidden`` as an induced subgraph."""
    return not any(contains_induced(host, f) for f in forbidden)
