"""Depth-first proof search over one-vertex extensions.

A search starts from a graph H known to sit inside every counterexample and
keeps a stack of graphs, at least one of which every counterexample not
satisfying the property must contain. Popping a graph replaces it by the
extensions forced by one of three rules:

* a dominating edge ``uv`` must be killed by a vertex missing both ends;
* failing that, a four-clique cover argument forces ``H' join F_k``;
* failing that, the same argument forces some member of dom(H').

The search succeeds when the stack empties.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Iterable

from .cliquecover import CoverContext, algorithm2
from .constructions import dom_set, join, make_fk
from .graph import (
    LabeledGraph,
    _bits,
    choose_dominating_edge,
    cliques_within,
    extend_with_mask,
    has_stable_triple,
    mask_to_labels,
    order_masks,
)
from .iso import contains_induced
from .properties import DomFallbackProperty, PropertySpec

log = logging.getLogger(__name__)

SWEEP_ORDER = (3, 2, 1, 0)


class Status(enum.Enum):
    RUNNING = "Running"
    SUCCESS = "Success"
    FAILURE = "Failure"
    ABORTED = "AbortedUnimplementedBranch"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class TraceEvent:
    kind: str  # push | pop | branch | done
    size: int = 0
    weight: int = 0
    detail: str = ""

    def __str__(self) -> str:
        tail = f" {self.detail}" if self.detail else ""
        return f"{self.kind} {self.size} {self.weight}{tail}"


@dataclass
class SearchOutcome:
    status: Status
    added_count: int
    weight: int
    trace: list[TraceEvent] = field(default_factory=list)

    @property
    def succeeded(self) -> bool:
        return self.status is Status.SUCCESS

    def trace_text(self) -> str:
        return "".join(f"{e}\n" for e in self.trace)


class BudgetExceeded(Exception):
    pass


def _as_property(p) -> PropertySpec:
    if isinstance(p, PropertySpec):
        return p
    if isinstance(p, LabeledGraph):
        return PropertySpec([p])
    return PropertySpec(p)


class SearchState:
    """One run of the search, advanced one main-loop iteration at a time.

    ``full=False`` gives the dominating-edge-only variant, which fails as
    soon as it pops a graph without a dominating edge.
    """

    def __init__(self, h: LabeledGraph, p, budget: int | None = None, full: bool = True):
        if has_stable_triple(h):
            raise ValueError("the start graph has a stable set of size 3")
        self.p = _as_property(p)
        self.budget = budget
        self.full = full
        self.stack: list[LabeledGraph] = []
        self.added_count = 0
        self.weight = 0
        self.trace: list[TraceEvent] = []
        self.iterations = 0
        self.status = Status.RUNNING
        if self.p.satisfied(h):
            self._finish(Status.SUCCESS)
            return
        try:
            self._push(h)
        except BudgetExceeded:
            self._finish(Status.BUDGET_EXHAUSTED)

    # -- bookkeeping -------------------------------------------------------

    def _finish(self, status: Status, detail: str = "") -> None:
        self.status = status
        self.trace.append(TraceEvent("done", 0, self.weight, status.value + (f" {detail}" if detail else "")))

    def _push(self, g: LabeledGraph) -> None:
        cost = 1 << g.n
        if self.budget is not None and self.weight + cost > self.budget:
            raise BudgetExceeded
        self.stack.append(g)
        self.added_count += 1
        self.weight += cost
        self.trace.append(TraceEvent("push", g.n, self.weight))

    def _stack_free(self, g: LabeledGraph) -> bool:
        # the newest stack entries are the likeliest to embed, so test them first
        return not any(contains_induced(g, s) for s in reversed(self.stack))

    def _admit_extension(self, g: LabeledGraph) -> bool:
        # g is the popped graph plus one vertex; the popped graph fails p
        return not has_stable_triple(g) and not self.p.satisfied_through(g, g.n) and self._stack_free(g)

    def _admit(self, g: LabeledGraph) -> bool:
        return not has_stable_triple(g) and not self.p.satisfied(g) and self._stack_free(g)

    @property
    def done(self) -> bool:
        return self.status is not Status.RUNNING

    def outcome(self) -> SearchOutcome:
        return SearchOutcome(self.status, self.added_count, self.weight, list(self.trace))

    # -- the main loop -----------------------------------------------------

    def step(self) -> Status:
        """Run one iteration of the main loop and return the resulting status."""
        if self.done:
            return self.status
        if not self.stack:
            self._finish(Status.SUCCESS)
            return self.status
        self.iterations += 1
        hp = self.stack.pop()
        self.trace.append(TraceEvent("pop", hp.n, self.weight))
        try:
            self._expand(hp)
        except BudgetExceeded:
            self._finish(Status.BUDGET_EXHAUSTED)
            return self.status
        if not self.done and not self.stack:
            self._finish(Status.SUCCESS)
        return self.status

    def run(self) -> SearchOutcome:
        while not self.done:
            self.step()
        return self.outcome()

    def _expand(self, hp: LabeledGraph) -> None:
        edge = choose_dominating_edge(hp)
        if edge is not None:
            self.trace.append(TraceEvent("branch", hp.n, self.weight, f"edge {edge.hi} {edge.lo}"))
            for nbrs in killing_extensions(hp, edge.hi, edge.lo):
                g = extend_with_mask(hp, nbrs)
                if self._admit_extension(g):
                    self._push(g)
            return
        if not self.full:
            self._finish(Status.FAILURE, "no dominating edge")
            return
        ctx = CoverContext(hp, self.p)
        for k in SWEEP_ORDER:
            if ctx.decide(k):
                self.trace.append(TraceEvent("branch", hp.n, self.weight, f"join F{k}"))
                g = join(hp, make_fk(k))
                if self._admit(g):
                    self._push(g)
                return
        if algorithm2(hp, DomFallbackProperty(hp, self.p)):
            self.trace.append(TraceEvent("branch", hp.n, self.weight, "dom"))
            for g in dom_set(hp):
                if self._admit_extension(g):
                    self._push(g)
            return
        # the remaining rule (H' itself is not a counterexample) is not implemented
        log.warning("no rule applies to a %d-vertex graph; aborting", hp.n)
        self._finish(Status.ABORTED, f"stuck on {hp!r}")


def killing_extensions(g: LabeledGraph, u: int, v: int) -> list[int]:
    """Neighbourhoods (bitmasks) of a new vertex missing ``u`` and ``v``, in extension order.

    Only neighbourhoods that keep the graph free of stable triples are
    listed: the new vertex's non-neighbours must form a clique containing
    ``u`` and ``v``. Assumes ``g`` itself is stable-triple-free.
    """
    ub, vb = 1 << (u - 1), 1 << (v - 1)
    common = g.adj[u - 1] & g.adj[v - 1]
    full = g.full_mask
    masks = [full & ~(ub | vb | k) for k in cliques_within(g, common)]
    return order_masks(masks)


def run_full(h: LabeledGraph, p, budget: int | None = None) -> SearchOutcome:
    """Run the complete search (all three rules) from ``h`` for property ``p``."""
    return SearchState(h, p, budget, full=True).run()


def run_basic(h: LabeledGraph, p, budget: int | None = None) -> SearchOutcome:
    """Run the dominating-edge rule alone; fails on a graph without one."""
    return SearchState(h, p, budget, full=False).run()


def step(state: SearchState) -> SearchState:
    """Advance ``state`` by one main-loop iteration (in place) and return it."""
    state.step()
    return state


def prove(h: LabeledGraph, targets: Iterable[LabeledGraph] | LabeledGraph, budget: int | None = None) -> SearchOutcome:
    return run_full(h, _as_property(targets), budget)


__all__ = [
    "SearchOutcome",
    "SearchState",
    "Status",
    "TraceEvent",
    "killing_extensions",
    "prove",
    "run_basic",
    "run_full",
    "step",
    "mask_to_labels",
]
