"""Text formats: the graph catalog, proof-forest files and report lines.

Catalog stanzas look like::

    graph I3 6 complement
      1-2 2-3 3-4 4-5 5-6 6-1

Forest files hold one ``source target`` pair per line. Report and expected
files hold ``source target count weight`` lines.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .graph import LabeledGraph, complement


class FormatError(ValueError):
    """A malformed input file; the message carries the line number."""

    def __init__(self, path: str, lineno: int, msg: str):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.path = path
        self.lineno = lineno


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    mode: str  # "direct" or "complement"
    listed_edges: tuple[tuple[int, int], ...]

    def listed_graph(self) -> LabeledGraph:
        return LabeledGraph.from_edges(self.n, self.listed_edges)

    def graph(self) -> LabeledGraph:
        g = self.listed_graph()
        return complement(g) if self.mode == "complement" else g


@dataclass(frozen=True)
class ProofEdge:
    source: str
    target: str
    expected_count: int | None = None
    expected_weight: int | None = None


@dataclass(frozen=True)
class ReportLine:
    source: str
    target: str
    count: int
    weight: int

    def __str__(self) -> str:
        return f"{self.source} {self.target} {self.count} {self.weight}"

    @classmethod
    def parse(cls, line: str) -> "ReportLine":
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"expected 4 columns, got {len(parts)}")
        src, dst, count, weight = parts
        count_i, weight_i = int(count), int(weight)
        if count_i < 0 or weight_i < 0:
            raise ValueError("count and weight must be nonnegative")
        return cls(src, dst, count_i, weight_i)


def _read_text(path) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield lineno, raw, line


def parse_catalog_entries(text: str, path: str = "<catalog>") -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    current = None
    edges: list[tuple[int, int]] = []

    def close():
        if current is not None:
            name, n, mode = current
            entries[name] = CatalogEntry(name, n, mode, tuple(edges))

    for lineno, raw, line in _content_lines(text):
        if not raw[0].isspace():
            parts = line.split()
            if len(parts) != 4 or parts[0] != "graph":
                raise FormatError(path, lineno, "expected 'graph NAME N direct|complement'")
            close()
            _, name, n_s, mode = parts
            if name in entries or (current is not None and current[0] == name):
                raise FormatError(path, lineno, f"duplicate graph name {name!r}")
            try:
                n = int(n_s)
            except ValueError:
                raise FormatError(path, lineno, f"bad vertex count {n_s!r}") from None
            if n < 0:
                raise FormatError(path, lineno, "negative vertex count")
            if mode not in ("direct", "complement"):
                raise FormatError(path, lineno, f"unknown mode {mode!r}")
            current = (name, n, mode)
            edges = []
            continue
        if current is None:
            raise FormatError(path, lineno, "edge line before any graph header")
        n = current[1]
        seen = set(edges)
        for tok in line.split():
            try:
                u_s, v_s = tok.split("-")
                u, v = int(u_s), int(v_s)
            except ValueError:
                raise FormatError(path, lineno, f"bad edge token {tok!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(path, lineno, f"edge {tok} uses a label outside 1..{n}")
            if u == v:
                raise FormatError(path, lineno, f"self-loop {tok}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(path, lineno, f"repeated edge {tok}")
            seen.add(key)
            edges.append((u, v))
    close()
    return entries


def load_catalog(path) -> dict[str, LabeledGraph]:
    """Read a catalog file into ``name -> graph`` (complement stanzas resolved)."""
    entries = parse_catalog_entries(_read_text(path), str(path))
    return {name: e.graph() for name, e in entries.items()}


def default_catalog_path():
    return resources.files("hcsearch") / "data" / "catalog.txt"


def default_forest_path():
    return resources.files("hcsearch") / "data" / "forest.txt"


def default_expected_path():
    return resources.files("hcsearch") / "data" / "expected.txt"


def format_stanza(entry: CatalogEntry) -> str:
    edges = " ".join(f"{u}-{v}" for u, v in entry.listed_edges)
    return f"graph {entry.name} {entry.n} {entry.mode}\n  {edges}\n"


def parse_forest(text: str, path: str = "<forest>") -> list[ProofEdge]:
    out = []
    for lineno, _, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(path, lineno, f"expected 'source target', got {len(parts)} columns")
        out.append(ProofEdge(parts[0], parts[1]))
    return out


def load_forest(path) -> list[ProofEdge]:
    return parse_forest(_read_text(path), str(path))


def parse_expected(text: str, path: str = "<expected>") -> dict[tuple[str, str], tuple[int, int]]:
    out: dict[tuple[str, str], tuple[int, int]] = {}
    for lineno, _, line in _content_lines(text):
        try:
            r = ReportLine.parse(line)
        except ValueError as exc:
            raise FormatError(path, lineno, str(exc)) from None
        key = (r.source, r.target)
        if key in out:
            raise FormatError(path, lineno, f"duplicate row for {r.source} -> {r.target}")
        out[key] = (r.count, r.weight)
    return out


def load_expected(path) -> dict[tuple[str, str], tuple[int, int]]:
    return parse_expected(_read_text(path), str(path))


def attach_expected(forest: Iterable[ProofEdge], expected: dict[tuple[str, str], tuple[int, int]]) -> list[ProofEdge]:
    out = []
    for e in forest:
        c, w = expected.get((e.source, e.target), (None, None))
        out.append(ProofEdge(e.source, e.target, c, w))
    return out


def emit_report(lines: Iterable[ReportLine]) -> str:
    return "".join(f"{line}\n" for line in lines)


def emit_expected(expected: dict[tuple[str, str], tuple[int, int]]) -> str:
    return emit_report(ReportLine(s, t, c, w) for (s, t), (c, w) in expected.items())


def write_report(lines: Iterable[ReportLine], path) -> None:
    with open(os.fspath(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit_report(lines))
