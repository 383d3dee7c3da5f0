"""Derived graphs: the F_k family, joins, dom(H), I-cores and the named catalog."""

from __future__ import annotations

from functools import lru_cache

from .catalog_io import default_catalog_path, load_catalog
from .graph import (
    LabeledGraph,
    complement,
    disjoint_union,
    extend_with_mask,
    has_dominating_edge,
    labels_to_mask,
    extension_order,
)
from .iso import contains_induced, contains_induced_through

TWO_K2 = LabeledGraph.from_edges(4, [(1, 2), (3, 4)])  # complement of C4

# T1: the path 1-2-3-4-5 with a pendant 6 on the middle vertex
T1 = LabeledGraph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
T2 = LabeledGraph.from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5), (2, 6)])
T3 = LabeledGraph.from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5), (3, 6)])


def make_fk(k: int) -> LabeledGraph:
    """F_0 = K1, F_1 = two non-adjacent vertices, F_2 = P4, F_3 = complement of T1."""
    if k == 0:
        return LabeledGraph.empty(1)
    if k == 1:
        return LabeledGraph.empty(2)
    if k == 2:
        return LabeledGraph.path(4)
    if k == 3:
        return complement(T1)
    raise ValueError(f"k must be in 0..3, got {k}")


def join(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """``g`` join ``h``: g keeps labels 1..|g|, h follows in its own order."""
    return complement(disjoint_union(complement(g), complement(h)))


def coning(g: LabeledGraph) -> LabeledGraph:
    return extend_with_mask(g, g.full_mask)


def dom_set(h: LabeledGraph) -> list[LabeledGraph]:
    """One-vertex extensions of ``h`` that have a dominating edge, in extension order."""
    out = []
    for nbrs in extension_order(h.labels):
        g = extend_with_mask(h, labels_to_mask(nbrs))
        if has_dominating_edge(g):
            out.append(g)
    return out


def core_mask(g: LabeledGraph, i: LabeledGraph) -> int:
    mask = 0
    for v in g.labels:
        if contains_induced_through(g, i, v):
            mask |= 1 << (v - 1)
    return mask


def core_of(g: LabeledGraph, i: LabeledGraph) -> LabeledGraph:
    """Subgraph of ``g`` induced by all vertices lying in an induced copy of ``i``."""
    return g.induced(core_mask(g, i))


def core_feasibility(h: LabeledGraph, target: LabeledGraph) -> bool:
    """Necessary condition for a search from ``h`` to prove ``target``.

    The 2K2-core of the target must embed in the 2K2-core of the start.
    """
    return contains_induced(core_of(h, TWO_K2), core_of(target, TWO_K2))


@lru_cache(maxsize=None)
def _default_catalog() -> dict[str, LabeledGraph]:
    return load_catalog(default_catalog_path())


_BUILTIN = {
    "F0": lambda: make_fk(0),
    "F1": lambda: make_fk(1),
    "F2": lambda: make_fk(2),
    "F3": lambda: make_fk(3),
    "T1": lambda: T1,
    "T2": lambda: T2,
    "T3": lambda: T3,
}


def catalog_names() -> list[str]:
    return list(_default_catalog()) + list(_BUILTIN)


def catalog_graph(name: str) -> LabeledGraph:
    """The named graph with its published labelling."""
    cat = _default_catalog()
    if name in cat:
        return cat[name]
    if name in _BUILTIN:
        return _BUILTIN[name]()
    raise KeyError(f"unknown catalog graph {name!r}")
