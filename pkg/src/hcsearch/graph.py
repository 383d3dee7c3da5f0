"""Labeled simple graphs and the combinatorial primitives the search consumes.

Vertices carry the labels ``1..n``. Internally vertex ``label`` lives at bit
``label - 1`` of an integer bitmask, so adjacency rows, neighbourhoods and
vertex subsets are all plain ints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence


class EdgeKey(NamedTuple):
    """An edge identified as ``(larger label, smaller label)``.

    Tuple comparison gives the lexicographic order used to pick dominating
    edges.
    """

    hi: int
    lo: int

    @classmethod
    def of(cls, u: int, v: int) -> "EdgeKey":
        if u == v:
            raise ValueError(f"self-loop on label {u}")
        return cls(max(u, v), min(u, v))


def _bits(mask: int) -> Iterator[int]:
    """Yield the 0-based indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_labels(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in _bits(mask))


def labels_to_mask(labels: Iterable[int]) -> int:
    mask = 0
    for x in labels:
        mask |= 1 << (x - 1)
    return mask


class LabeledGraph:
    """Immutable simple graph on the labels ``1..n``."""

    __slots__ = ("n", "adj", "_hash", "_igraph", "_nedges")

    def __init__(self, n: int, adj: Sequence[int]):
        if len(adj) != n:
            raise ValueError("adjacency rows must match vertex count")
        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row & ~full or row >> i & 1:
                raise ValueError(f"bad adjacency row for label {i + 1}")
            for j in _bits(row):
                if not adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j + 1}")
        self.n = n
        self.adj = tuple(adj)
        self._hash = None
        self._igraph = None
        self._nedges = None

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "LabeledGraph":
        # skips validation; callers guarantee symmetry and no loops
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = None
        g._igraph = None
        g._nedges = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has a label outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop on label {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> "LabeledGraph":
        return cls._trusted(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "LabeledGraph":
        full = (1 << n) - 1
        return cls._trusted(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "LabeledGraph":
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "LabeledGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)])

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return mask_to_labels(self.adj[u - 1])

    def degree(self, u: int) -> int:
        return self.adj[u - 1].bit_count()

    def num_edges(self) -> int:
        if self._nedges is None:
            self._nedges = sum(row.bit_count() for row in self.adj) // 2
        return self._nedges

    def edges(self) -> list[EdgeKey]:
        """All edges in ascending EdgeKey order."""
        return [EdgeKey(i + 1, j + 1) for i in range(self.n) for j in _bits(self.adj[i] & ((1 << i) - 1))]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def induced(self, mask: int) -> "LabeledGraph":
        """Subgraph induced by the vertex set ``mask``, relabelled 1..k in label order."""
        idx = list(_bits(mask & self.full_mask))
        pos = {v: k for k, v in enumerate(idx)}
        rows = []
        for v in idx:
            row = 0
            for w in _bits(self.adj[v] & mask):
                row |= 1 << pos[w]
            rows.append(row)
        return LabeledGraph._trusted(len(idx), tuple(rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        es = " ".join(f"{e.lo}-{e.hi}" for e in sorted(self.edges(), key=lambda e: (e.lo, e.hi)))
        return f"LabeledGraph(n={self.n}, edges=[{es}])"

    # state is just (n, adj); caches are rebuilt lazily
    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        self.n, self.adj = state
        self._hash = None
        self._igraph = None
        self._nedges = None


# ---------------------------------------------------------------------------
# predicates


def has_stable_triple(g: LabeledGraph) -> bool:
    """True iff ``g`` has three pairwise non-adjacent vertices."""
    full = g.full_mask
    adj = g.adj
    for i in range(g.n):
        # non-neighbours of i with a larger index
        rest = ~adj[i] & full & ~((2 << i) - 1)
        for j in _bits(rest):
            if rest & ~adj[j] & ~((2 << j) - 1):
                return True
    return False


def extension_has_stable_triple(g: LabeledGraph, nbr_mask: int) -> bool:
    """Whether adding a vertex adjacent to ``nbr_mask`` creates a stable triple.

    Assumes ``g`` itself is stable-triple-free: the new vertex is then in a
    stable triple iff two of its non-neighbours are non-adjacent.
    """
    miss = g.full_mask & ~nbr_mask
    adj = g.adj
    for i in _bits(miss):
        if miss & ~adj[i] & ~(1 << i):
            return True
    return False


def is_clique_mask(g: LabeledGraph, mask: int) -> bool:
    adj = g.adj
    for i in _bits(mask):
        if mask & ~adj[i] & ~(1 << i):
            return False
    return True


def dominating_edges(g: LabeledGraph) -> list[EdgeKey]:
    """Edges ``uv`` with every other vertex adjacent to ``u`` or ``v``, ascending."""
    full = g.full_mask
    adj = g.adj
    out = []
    for i in range(g.n):
        for j in _bits(adj[i] & ((1 << i) - 1)):
            if (adj[i] | adj[j] | (1 << i) | (1 << j)) == full:
                out.append(EdgeKey(i + 1, j + 1))
    return out


def choose_dominating_edge(g: LabeledGraph) -> EdgeKey | None:
    """The dominating edge whose larger label is smallest (ties: smaller label)."""
    full = g.full_mask
    adj = g.adj
    for i in range(g.n):
        for j in _bits(adj[i] & ((1 << i) - 1)):
            if (adj[i] | adj[j] | (1 << i) | (1 << j)) == full:
                return EdgeKey(i + 1, j + 1)
    return None


def has_dominating_edge(g: LabeledGraph) -> bool:
    return choose_dominating_edge(g) is not None


# ---------------------------------------------------------------------------
# growing graphs


def extend_with_mask(g: LabeledGraph, nbr_mask: int) -> LabeledGraph:
    """``g`` plus a vertex labelled ``n + 1`` adjacent to the bitmask ``nbr_mask``."""
    n = g.n
    bit = 1 << n
    adj = tuple(row | bit if nbr_mask >> i & 1 else row for i, row in enumerate(g.adj)) + (nbr_mask,)
    return LabeledGraph._trusted(n + 1, adj)


def extend_with_vertex(g: LabeledGraph, nbrs: Iterable[int]) -> LabeledGraph:
    """Return ``g`` plus one vertex labelled ``|V(g)| + 1`` adjacent exactly to ``nbrs``."""
    nbrs = tuple(nbrs)
    for x in nbrs:
        if not 1 <= x <= g.n:
            raise ValueError(f"label {x} is not a vertex of the graph")
    return extend_with_mask(g, labels_to_mask(nbrs))


def extension_sort_key(nbrs: Sequence[int]) -> tuple[int, ...]:
    """Sort key for neighbourhoods; sorting with ``reverse=True`` gives extension order."""
    return tuple(sorted(nbrs))


def extension_order(ground: Iterable[int]) -> list[tuple[int, ...]]:
    """Every subset of ``ground`` in the order candidate extensions are tried.

    Sets are compared as sorted tuples, a proper prefix counting as smaller,
    and listed from lexicographically greatest to least.
    """
    elems = sorted(set(ground))
    subsets = [c for r in range(len(elems) + 1) for c in combinations(elems, r)]
    subsets.sort(reverse=True)
    return subsets


def order_masks(masks: Iterable[int]) -> list[int]:
    """Sort neighbourhood bitmasks into extension order."""
    return sorted(masks, key=mask_to_labels, reverse=True)


def cliques_within(g: LabeledGraph, allowed: int) -> Iterator[int]:
    """Yield every clique (as a bitmask, including the empty set) inside ``allowed``."""
    adj = g.adj
    stack = [(0, allowed)]
    while stack:
        clique, cand = stack.pop()
        yield clique
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append((clique | low, cand & adj[v]))


def complement(g: LabeledGraph) -> LabeledGraph:
    """Same labels, complemented adjacency."""
    full = g.full_mask
    return LabeledGraph._trusted(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def disjoint_union(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    shift = g.n
    return LabeledGraph._trusted(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


# ---------------------------------------------------------------------------
# connected dominating matchings


class MatchKind(enum.Enum):
    DOMINATING_EDGE = "DominatingEdge"
    TWO_EDGE_MATCHING = "TwoEdgeMatching"
    NEITHER = "Neither"


@dataclass(frozen=True)
class MatchClassification:
    kind: MatchKind
    witness: tuple[EdgeKey, ...] = ()

    def __post_init__(self):
        if (self.kind is MatchKind.NEITHER) != (not self.witness):
            raise ValueError("witness must be present iff kind is not Neither")


def is_two_edge_matching(g: LabeledGraph, e: EdgeKey, f: EdgeKey) -> bool:
    """Whether disjoint edges ``e`` and ``f`` form a connected dominating matching."""
    u, v = e.hi - 1, e.lo - 1
    x, y = f.hi - 1, f.lo - 1
    if len({u, v, x, y}) < 4:
        return False
    adj = g.adj
    uv = (1 << u) | (1 << v)
    if not (uv & adj[x] or uv & adj[y]):
        return False
    outside = g.full_mask & ~(uv | (1 << x) | (1 << y))
    return outside & ~(adj[u] | adj[v]) == 0 and outside & ~(adj[x] | adj[y]) == 0


def classify_matching(g: LabeledGraph) -> MatchClassification:
    e = choose_dominating_edge(g)
    if e is not None:
        return MatchClassification(MatchKind.DOMINATING_EDGE, (e,))
    es = g.edges()
    for a in range(len(es)):
        for b in range(a + 1, len(es)):
            if is_two_edge_matching(g, es[a], es[b]):
                return MatchClassification(MatchKind.TWO_EDGE_MATCHING, (es[a], es[b]))
    return MatchClassification(MatchKind.NEITHER)
