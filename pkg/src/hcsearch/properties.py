"""Monotone properties used as the search's stopping condition."""

from __future__ import annotations

from typing import Iterable

from .graph import LabeledGraph, has_dominating_edge
from .iso import contains_induced, contains_induced_through


class PropertySpec:
    """"Contains some target as an induced subgraph".

    ``satisfied_through(g, v)`` answers the same question under the promise
    that ``g`` minus vertex ``v`` does not satisfy the property, so only
    copies using ``v`` need to be looked for.
    """

    def __init__(self, targets: Iterable[LabeledGraph] = ()):
        self.targets = tuple(targets)

    def satisfied(self, g: LabeledGraph) -> bool:
        return any(contains_induced(g, t) for t in self.targets)

    def satisfied_through(self, g: LabeledGraph, v: int) -> bool:
        return any(contains_induced_through(g, t, v) for t in self.targets)

    def __repr__(self) -> str:
        return f"PropertySpec({len(self.targets)} targets)"


class DomFallbackProperty(PropertySpec):
    """``inner`` OR "contains some member of dom(base)".

    A graph contains a member of dom(base) iff one of its induced subgraphs
    on ``|base| + 1`` vertices has a dominating edge and contains ``base``.
    Only graphs with at most ``|base| + 2`` vertices are handled through
    that shortcut; larger ones fall back to the literal member list.
    """

    def __init__(self, base: LabeledGraph, inner: PropertySpec):
        super().__init__(inner.targets)
        self.base = base
        self.inner = inner
        self._members = None

    def _contains_dom_member(self, g: LabeledGraph) -> bool:
        n = self.base.n
        if g.n <= n:
            return False
        if g.n == n + 1:
            return has_dominating_edge(g) and contains_induced(g, self.base)
        if g.n == n + 2:
            full = g.full_mask
            for x in range(g.n):
                sub = g.induced(full & ~(1 << x))
                if has_dominating_edge(sub) and contains_induced(sub, self.base):
                    return True
            return False
        if self._members is None:
            from .constructions import dom_set

            self._members = dom_set(self.base)
        return any(contains_induced(g, m) for m in self._members)

    def satisfied(self, g: LabeledGraph) -> bool:
        return self.inner.satisfied(g) or self._contains_dom_member(g)

    def satisfied_through(self, g: LabeledGraph, v: int) -> bool:
        return self.inner.satisfied_through(g, v) or self._contains_dom_member(g)
