"""graph6 reading/writing and DOT output.

graph6: the order is written as ``chr(n + 63)`` for ``n <= 62``, ``~`` plus
three 6-bit bytes up to 258047, and ``~~`` plus six bytes beyond that.  The
upper triangle follows column by column (``x(0,1), x(0,2), x(1,2), x(0,3)...``),
packed big-endian six bits per byte with zero padding.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from curvex.errors import MalformedGraph6
from curvex.graph.core import Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_order(n)]
    acc = nbits = 0
    for j in range(1, n):
        nb = g._adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in nb)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (surrounding whitespace and header ignored)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"character {ch!r} outside the graph6 range", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if not vals:
        raise MalformedGraph6("empty record", base)
    pos = 0
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            width, pos = 6, 2
        else:
            width, pos = 3, 1
        if len(vals) < pos + width:
            raise MalformedGraph6("truncated order field", base + len(vals))
        n = 0
        for v in vals[pos:pos + width]:
            n = (n << 6) | v
        pos += width
    else:
        n, pos = vals[0], 1
    if n == 0:
        raise MalformedGraph6("graphs with zero vertices are not supported", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} edge bytes for n={n}, found {len(body)}", base + pos + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits", base + pos + need - 1)
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str | bytes]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for the non-blank lines of a stream (1-based)."""
    for no, raw in enumerate(lines, start=1):
        line = raw.decode("ascii", errors="replace") if isinstance(raw, bytes) else raw
        line = line.strip()
        if line:
            yield no, line


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT source with vertex labels equal to indices."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
