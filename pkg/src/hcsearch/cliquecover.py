"""Four-clique covers of the neighbourhood-class graph.

Given a start graph H and a monotone property P, the vertices outside an
induced H fall into cliques keyed by their neighbourhood in H. If the
auxiliary graph built from those classes has a cover by four cliques whose
H-parts sum to at least ``|H| + 2``, no counterexample extends H without
either satisfying P or containing ``H join F_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from pysat.card import CardEnc, EncType
from pysat.solvers import Solver

from .constructions import join, make_fk
from .graph import (
    LabeledGraph,
    _bits,
    cliques_within,
    extend_with_mask,
    has_stable_triple,
    mask_to_labels,
    order_masks,
)
from .properties import PropertySpec

NUM_CLIQUES = 4
SAT_SOLVER = "cadical195"


class SolverError(RuntimeError):
    """The satisfiability procedure failed to decide an instance."""


def build_neighborhood_classes(h: LabeledGraph, p: PropertySpec, include_full: bool = False) -> list[int]:
    """Admissible neighbourhoods of one new vertex, as bitmasks in extension order.

    A neighbourhood N is kept when H plus a vertex adjacent to exactly N has
    no stable triple and does not satisfy ``p``. The full vertex set is left
    out unless ``include_full`` is set.
    """
    if has_stable_triple(h) or p.satisfied(h):
        # every extension inherits the triple or the property
        return []
    full = h.full_mask
    out = []
    # the non-neighbourhood of the new vertex must be a clique
    for miss in cliques_within(h, full):
        if miss == 0 and not include_full:
            continue
        nbrs = full ^ miss
        g = extend_with_mask(h, nbrs)
        if not p.satisfied_through(g, g.n):
            out.append(nbrs)
    return order_masks(out)


def _two_vertex_graph(h: LabeledGraph, n1: int, n2: int) -> LabeledGraph:
    # h plus non-adjacent vertices u (label n+1) and v (label n+2)
    return extend_with_mask(extend_with_mask(h, n1), n2)


def build_completion_pairs(h: LabeledGraph, p: PropertySpec, classes: Sequence[int]) -> set[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i < j``, whose class cliques must be complete to each other."""
    full = h.full_mask
    out = set()
    for i, j in combinations(range(len(classes)), 2):
        if (full & ~classes[i]) & (full & ~classes[j]):
            # a shared non-neighbour in H makes a stable triple
            out.add((i, j))
            continue
        g = _two_vertex_graph(h, classes[i], classes[j])
        if has_stable_triple(g) or p.satisfied_through(g, h.n + 1):
            out.add((i, j))
    return out


def build_apex_links(h: LabeledGraph, p: PropertySpec, classes: Sequence[int]) -> set[int]:
    """Indices of classes that must be complete to the vertices dominating H."""
    out = set()
    for i, nbrs in enumerate(classes):
        g = _two_vertex_graph(h, nbrs, h.full_mask)
        if has_stable_triple(g) or p.satisfied(g):
            out.add(i)
    return out


@dataclass(frozen=True)
class AuxiliaryCliqueGraph:
    """H, then one vertex per class, then ``k`` apex vertices (0-based indices)."""

    base: LabeledGraph
    classes: tuple[int, ...]
    pairs: frozenset
    apex_links: frozenset
    k: int
    graph: LabeledGraph = field(compare=False)

    @property
    def base_n(self) -> int:
        return self.base.n

    def class_vertex(self, i: int) -> int:
        return self.base.n + i

    def apex_vertex(self, i: int) -> int:
        return self.base.n + len(self.classes) + i


def assemble_auxiliary(
    h: LabeledGraph,
    classes: Sequence[int],
    pairs,
    apex_links,
    k: int,
) -> AuxiliaryCliqueGraph:
    n = h.n
    a = len(classes)
    total = n + a + k
    adj = [0] * total
    for x in range(n):
        adj[x] = h.adj[x]
    for i, nbrs in enumerate(classes):
        u = n + i
        adj[u] |= nbrs
        for x in _bits(nbrs):
            adj[x] |= 1 << u
    for i, j in pairs:
        u, v = n + i, n + j
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    for t in range(k):
        w = n + a + t
        adj[w] |= h.full_mask
        for x in range(n):
            adj[x] |= 1 << w
        for i in apex_links:
            u = n + i
            adj[w] |= 1 << u
            adj[u] |= 1 << w
    g = LabeledGraph._trusted(total, tuple(adj))
    return AuxiliaryCliqueGraph(h, tuple(classes), frozenset(pairs), frozenset(apex_links), k, g)


@dataclass(frozen=True)
class CoverCertificate:
    """Four vertex sets (0-based auxiliary indices) covering the auxiliary graph."""

    cliques: tuple[frozenset, ...]

    def surplus(self, base_n: int) -> int:
        return sum(sum(1 for v in q if v < base_n) for q in self.cliques) - base_n


def validate_certificate(aux: AuxiliaryCliqueGraph, cert: CoverCertificate) -> bool:
    g = aux.graph
    if len(cert.cliques) != NUM_CLIQUES:
        return False
    covered = set()
    for q in cert.cliques:
        for u, v in combinations(sorted(q), 2):
            if not g.adj[u] >> v & 1:
                return False
        covered |= q
    if covered != set(range(g.n)):
        return False
    return cert.surplus(aux.base_n) >= 2


def _var(vertex: int, i: int) -> int:
    # vertex is 0-based, i in 1..4
    return NUM_CLIQUES * vertex + i


def cover_cnf(aux: AuxiliaryCliqueGraph) -> tuple[list[list[int]], int]:
    """Clauses (and variable count) whose models are the admissible covers."""
    g = aux.graph
    total = g.n
    clauses = [[_var(v, i) for i in range(1, NUM_CLIQUES + 1)] for v in range(total)]
    full = g.full_mask
    for u in range(total):
        for v in _bits(full & ~g.adj[u] & ~((2 << u) - 1)):
            for i in range(1, NUM_CLIQUES + 1):
                clauses.append([-_var(u, i), -_var(v, i)])
    top = NUM_CLIQUES * total
    lits = [_var(v, i) for v in range(aux.base_n) for i in range(1, NUM_CLIQUES + 1)]
    bound = aux.base_n + 2
    if bound > len(lits):
        clauses.append([])
    else:
        card = CardEnc.atleast(lits=lits, bound=bound, top_id=top, encoding=EncType.seqcounter)
        clauses.extend(card.clauses)
        top = max(top, card.nv)
    return clauses, top


def to_dimacs(aux: AuxiliaryCliqueGraph) -> str:
    clauses, nv = cover_cnf(aux)
    lines = [f"p cnf {nv} {len(clauses)}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in clauses)
    return "\n".join(lines) + "\n"


def cover_exists(aux: AuxiliaryCliqueGraph) -> CoverCertificate | None:
    """Find four cliques covering ``aux`` with H-surplus at least 2, or None."""
    clauses, _ = cover_cnf(aux)
    if any(not c for c in clauses):
        return None
    with Solver(name=SAT_SOLVER, bootstrap_with=clauses) as solver:
        status = solver.solve()
        if status is None:
            raise SolverError("SAT solver returned no answer")
        if not status:
            return None
        model = set(lit for lit in solver.get_model() if lit > 0)
    cliques = tuple(
        frozenset(v for v in range(aux.graph.n) if _var(v, i) in model) for i in range(1, NUM_CLIQUES + 1)
    )
    cert = CoverCertificate(cliques)
    if not validate_certificate(aux, cert):
        raise SolverError("SAT model does not decode to a valid cover")
    return cert


class CoverContext:
    """The class data for one ``(H, P)`` pair, shared across every ``k``."""

    def __init__(self, h: LabeledGraph, p: PropertySpec):
        self.h = h
        self.p = p
        self._classes = None
        self._pairs = None
        self._apex = None

    @property
    def classes(self) -> list[int]:
        if self._classes is None:
            self._classes = build_neighborhood_classes(self.h, self.p)
        return self._classes

    @property
    def pairs(self) -> set[tuple[int, int]]:
        if self._pairs is None:
            self._pairs = build_completion_pairs(self.h, self.p, self.classes)
        return self._pairs

    @property
    def apex_links(self) -> set[int]:
        if self._apex is None:
            self._apex = build_apex_links(self.h, self.p, self.classes)
        return self._apex

    def auxiliary(self, k: int) -> AuxiliaryCliqueGraph:
        apex = self.apex_links if k > 0 else set()
        return assemble_auxiliary(self.h, self.classes, self.pairs, apex, k)

    def decide(self, k: int) -> bool:
        return cover_exists(self.auxiliary(k)) is not None


def algorithm3(h: LabeledGraph, p: PropertySpec, k: int) -> bool:
    """True iff every counterexample with an induced ``h`` satisfies ``p`` or contains ``h join F_k``."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"k must be in 0..3, got {k}")
    return CoverContext(h, p).decide(k)


def algorithm2(h: LabeledGraph, p: PropertySpec) -> bool:
    """The ``k = 0`` case: conclude a vertex dominating ``h`` exists."""
    return algorithm3(h, p, 0)


def describe_classes(classes: Sequence[int]) -> list[tuple[int, ...]]:
    return [mask_to_labels(c) for c in classes]


def joined_with_fk(h: LabeledGraph, k: int) -> LabeledGraph:
    return join(h, make_fk(k))
