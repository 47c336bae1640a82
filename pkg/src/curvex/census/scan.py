"""Scanning graph6 streams for distance exceptional graphs."""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from curvex.errors import InvalidParameter, MalformedGraph6
from curvex.graph.core import is_connected
from curvex.graph.formats import parse_graph6, read_graph6_lines
from curvex.index.core import index_of, is_distance_exceptional
from curvex.values import IndexValue


@dataclass
class CensusReport:
    n: int | None
    total_connected: int = 0
    dx_count: int = 0
    dx_examples: list[str] = field(default_factory=list)
    index_histogram: dict[str, int] = field(default_factory=dict)
    malformed: list[int] = field(default_factory=list)
    skipped_disconnected: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total_connected": self.total_connected,
            "dx_count": self.dx_count,
            "dx_examples": list(self.dx_examples),
            "index_histogram": dict(self.index_histogram),
            "malformed_lines": list(self.malformed),
            "malformed_count": len(self.malformed),
            "skipped_disconnected": self.skipped_disconnected,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def histogram_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "count"])
        for key, count in self.index_histogram.items():
            w.writerow([key, count])
        return buf.getvalue()


def _classify(item: tuple[int, str]) -> tuple:
    line_no, text = item
    try:
        g = parse_graph6(text)
    except MalformedGraph6:
        return line_no, "malformed", None, None, None
    if not is_connected(g):
        return line_no, "disconnected", g.n, None, None
    return line_no, "ok", g.n, text, str(index_of(g))


def _classify_chunk(chunk: list[tuple[int, str]]) -> list[tuple]:
    return [_classify(item) for item in chunk]


def _chunks(items: list, size: int) -> list[list]:
    return [items[i : i + size] for i in range(0, len(items), size)]


def default_jobs() -> int:
    raw = os.environ.get("CURVEX_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise InvalidParameter(f"CURVEX_JOBS must be an integer, got {raw!r}") from None
    return max(jobs, 1)


def scan_graph6(stream: Iterable[str | bytes], jobs: int | None = None, chunk_size: int = 256) -> CensusReport:
    """Compute the index of every connected graph in a graph6 stream.

    Malformed lines are recorded by line number and skipped; disconnected
    graphs are counted and skipped. Work is split into chunks for a process
    pool of ``jobs`` workers and merged back in input order, so the report does
    not depend on ``jobs``. Every DX example is re-verified with a fresh kernel
    certificate before it is reported.
    """
    jobs = default_jobs() if jobs is None else jobs
    if jobs < 1:
        raise InvalidParameter(f"jobs must be positive, got {jobs}")
    items = list(read_graph6_lines(stream))
    chunks = _chunks(items, chunk_size)
    if jobs == 1 or len(chunks) <= 1:
        results = [r for c in chunks for r in _classify_chunk(c)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_classify_chunk, chunks) for r in part]

    orders = set()
    hist: Counter[str] = Counter()
    report = CensusReport(n=None)
    for _line_no, status, n, text, idx in results:
        if status == "malformed":
            report.malformed.append(_line_no)
            continue
        orders.add(n)
        if status == "disconnected":
            report.skipped_disconnected += 1
            continue
        report.total_connected += 1
        hist[idx] += 1
        if IndexValue.parse(idx).is_zero:
            report.dx_count += 1
            report.dx_examples.append(text)
    for text in report.dx_examples:
        dx, _ = is_distance_exceptional(parse_graph6(text))
        if not dx:
            raise AssertionError(f"{text} failed DX re-verification")
    report.n = orders.pop() if len(orders) == 1 else None
    report.index_histogram = {k: hist[k] for k in sorted(hist, key=lambda s: IndexValue.parse(s))}
    return report
