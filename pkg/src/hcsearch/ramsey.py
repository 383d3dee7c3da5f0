"""graph6 ingestion and the dominating-edge / two-edge-matching tally."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .graph import LabeledGraph, MatchKind, classify_matching, complement

log = logging.getLogger(__name__)

HEADER = ">>graph6<<"
PROGRESS_EVERY = 10_000


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the index of the offending character."""

    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (at offset {offset})")
        self.offset = offset


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty record", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6Error("truncated vertex count", len(data))
    n = 0
    for c in data[start : start + width]:
        n = (n << 6) | (c - 63)
    return n, start + width


def parse_graph6(line: str) -> LabeledGraph:
    """Decode one graph6 record; vertex ``i`` of the record becomes label ``i + 1``."""
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    data = text.encode("ascii", errors="replace")
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {chr(c)!r} outside the graph6 range", pos)
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for {n} vertices, got {len(body)}", pos + min(len(body), need))
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return LabeledGraph(n, adj)


def encode_graph6(g: LabeledGraph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(int("".join(map(str, bits[p : p + 6])), 2) + 63) for p in range(0, len(bits), 6))
    return head + body


@dataclass
class ClassificationTally:
    total: int = 0
    dominating_edge: int = 0
    two_edge_matching: int = 0
    neither: int = 0
    errors: list[tuple[int, str]] = field(default_factory=list)

    def add(self, kind: MatchKind) -> None:
        self.total += 1
        if kind is MatchKind.DOMINATING_EDGE:
            self.dominating_edge += 1
        elif kind is MatchKind.TWO_EDGE_MATCHING:
            self.two_edge_matching += 1
        else:
            self.neither += 1

    def summary_line(self) -> str:
        return f"{self.total} / {self.total} [{self.dominating_edge}, {self.two_edge_matching}]"


def classify_lines(lines: Iterable[str], complement_first: bool = False) -> ClassificationTally:
    tally = ClassificationTally()
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        try:
            g = parse_graph6(raw)
        except Graph6Error as exc:
            tally.errors.append((lineno, str(exc)))
            log.error("line %d: %s", lineno, exc)
            continue
        if complement_first:
            g = complement(g)
        tally.add(classify_matching(g).kind)
        if tally.total % PROGRESS_EVERY == 0:
            log.info("%d graphs read: %d dominating edge, %d matching, %d neither",
                     tally.total, tally.dominating_edge, tally.two_edge_matching, tally.neither)
    return tally


def classify_dataset(path, complement_first: bool = False) -> ClassificationTally:
    """Stream a graph6 file and tally how each graph is classified."""
    with open(path, encoding="ascii", errors="replace") as fh:
        return classify_stream(fh, complement_first)


def classify_stream(fh: TextIO, complement_first: bool = False) -> ClassificationTally:
    return classify_lines(fh, complement_first)


__all__ = [
    "ClassificationTally",
    "Graph6Error",
    "classify_dataset",
    "classify_lines",
    "encode_graph6",
    "parse_graph6",
]
