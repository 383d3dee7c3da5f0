"""Running the arrows of a proof forest and scheduling discovery runs."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .catalog_io import ProofEdge, ReportLine
from .constructions import catalog_graph
from .graph import LabeledGraph
from .search import SearchOutcome, SearchState, Status, run_full

log = logging.getLogger(__name__)

Resolver = Callable[[str], LabeledGraph]


class VerificationError(RuntimeError):
    """An arrow whose search did not end in success."""

    def __init__(self, edge: ProofEdge, outcome: SearchOutcome):
        super().__init__(f"{edge.source} -> {edge.target}: {outcome.status.value}")
        self.edge = edge
        self.outcome = outcome


@dataclass(frozen=True)
class EdgeResult:
    edge: ProofEdge
    status: Status
    line: ReportLine

    @property
    def matches(self) -> bool | None:
        """None when the edge carries no expectation."""
        if self.edge.expected_count is None:
            return None
        return (self.line.count, self.line.weight) == (self.edge.expected_count, self.edge.expected_weight)

    @property
    def ok(self) -> bool:
        return self.status is Status.SUCCESS and self.matches is not False


@dataclass
class ForestReport:
    results: list[EdgeResult]

    @property
    def lines(self) -> list[ReportLine]:
        return [r.line for r in self.results]

    @property
    def mismatches(self) -> list[EdgeResult]:
        return [r for r in self.results if r.matches is False]

    @property
    def failures(self) -> list[EdgeResult]:
        return [r for r in self.results if r.status is not Status.SUCCESS]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def summary(self) -> str:
        n = len(self.results)
        checked = sum(1 for r in self.results if r.matches is not None)
        return (
            f"{n} edges, {checked} with expectations, "
            f"{len(self.mismatches)} mismatched, {len(self.failures)} unsuccessful"
        )


def _run_edge(edge: ProofEdge, budget: int | None, resolve: Resolver) -> EdgeResult:
    out = run_full(resolve(edge.source), resolve(edge.target), budget)
    line = ReportLine(edge.source, edge.target, out.added_count, out.weight)
    return EdgeResult(edge, out.status, line)


def verify_edge(edge: ProofEdge, budget: int | None = None, resolve: Resolver = catalog_graph) -> ReportLine:
    """Run one arrow; raise :class:`VerificationError` unless it succeeds.

    A count or weight differing from the edge's expectation is logged, not
    raised; use :func:`verify_forest` to collect mismatches.
    """
    out = run_full(resolve(edge.source), resolve(edge.target), budget)
    if out.status is not Status.SUCCESS:
        raise VerificationError(edge, out)
    line = ReportLine(edge.source, edge.target, out.added_count, out.weight)
    res = EdgeResult(edge, out.status, line)
    if res.matches is False:
        log.warning("mismatch: got %s, expected %s %s", line, edge.expected_count, edge.expected_weight)
    return line


def _edge_budget(edge: ProofEdge, budget: int | None, cap_at_expected: bool) -> int | None:
    if not cap_at_expected or edge.expected_weight is None:
        return budget
    return edge.expected_weight if budget is None else min(budget, edge.expected_weight)


def _worker(args):
    edge, budget = args
    return _run_edge(edge, budget, catalog_graph)


def verify_forest(
    forest: Sequence[ProofEdge],
    jobs: int = 1,
    budget: int | None = None,
    resolve: Resolver = catalog_graph,
    progress: Callable[[EdgeResult], None] | None = None,
    cap_at_expected: bool = False,
) -> ForestReport:
    """Run every arrow and return results in input order.

    With ``jobs > 1`` the arrows run in worker processes; only the default
    catalog resolver is supported there.

    ``cap_at_expected`` stops each arrow once it would pass its expected
    weight. An exact match never gets there, so this only shortens runs
    that are going to mismatch anyway.
    """
    results: list[EdgeResult] = []
    budgets = [_edge_budget(e, budget, cap_at_expected) for e in forest]
    if jobs > 1 and forest:
        if resolve is not catalog_graph:
            raise ValueError("parallel verification only supports the default catalog")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for res in pool.map(_worker, list(zip(forest, budgets))):
                results.append(res)
                if progress:
                    progress(res)
    else:
        for e, b in zip(forest, budgets):
            res = _run_edge(e, b, resolve)
            results.append(res)
            if progress:
                progress(res)
    return ForestReport(results)


@dataclass
class Instance:
    source: str
    target: str
    state: SearchState
    status: Status = field(init=False)

    def __post_init__(self):
        self.status = self.state.status

    @property
    def weight(self) -> int:
        return self.state.weight


def schedule_discovery(
    instances: Iterable[tuple[str, str]],
    weight_ceiling: int | None,
    resolve: Resolver = catalog_graph,
) -> list[Instance]:
    """Advance many searches fairly: always step the lightest unfinished one.

    Ties go to the earlier instance. A search whose weight would pass
    ``weight_ceiling`` stops with ``BudgetExhausted``.
    """
    live = [Instance(s, t, SearchState(resolve(s), resolve(t), weight_ceiling)) for s, t in instances]
    while True:
        running = [i for i in live if not i.state.done]
        if not running:
            break
        cur = min(running, key=lambda i: i.weight)
        cur.status = cur.state.step()
    for inst in live:
        inst.status = inst.state.status
    return live


__all__ = [
    "EdgeResult",
    "ForestReport",
    "Instance",
    "VerificationError",
    "schedule_discovery",
    "verify_edge",
    "verify_forest",
]
