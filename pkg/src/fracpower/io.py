"""Reading and writing graphs: edge lists, graph6, and DOT."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

__all__ = [
    "ParseError",
    "parse_graph",
    "parse_edgelist",
    "parse_graph6",
    "iter_graph6",
    "to_edgelist",
    "to_graph6",
    "to_dot",
]

_GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed graph text. ``line`` and ``offset`` locate the problem."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.offset = offset


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    fmt = format.replace("-", "").lower()
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    raise ValueError(f"unknown graph format {format!r}")


def parse_edgelist(text: str) -> Graph:
    """Parse one edge per line; ``#`` comments; optional ``n <count>`` header."""
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("bad vertex-count header", line=lineno)
            declared = int(parts[1])
            continue
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise ParseError(f"expected two non-negative integers, got {raw!r}", line=lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        edges.append((u, v))
    inferred = 1 + max((max(e) for e in edges), default=-1)
    if declared is not None and declared < inferred:
        raise ParseError(f"header declares {declared} vertices but edges reach {inferred - 1}")
    return Graph(declared if declared is not None else inferred, edges)


def _graph6_size(data: bytes, line: int | None) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string", line=line, offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise ParseError("truncated graph6 size field", line=line, offset=len(data))
    n = 0
    for b in data[start:start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def parse_graph6(s: str | bytes, line: int | None = None) -> Graph:
    data = s.encode("ascii") if isinstance(s, str) else bytes(s)
    data = data.strip()
    if data.startswith(_GRAPH6_HEADER.encode()):
        data = data[len(_GRAPH6_HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b!r}", line=line, offset=pos)
    n, start = _graph6_size(data, line)
    if n < 0:
        raise ParseError("bad graph6 header", line=line, offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {need} for {n} vertices",
            line=line,
            offset=start + min(len(body), need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | ParseError]]:
    """Yield ``(line number, text, graph or ParseError)`` for a graph6 stream.

    Parse failures are yielded rather than raised so a batch run can report
    the bad line and keep going.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text, line=lineno)
        except ParseError as exc:
            yield lineno, text, exc


def to_graph6(g: Graph) -> str:
    n = g.vertex_count
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def to_edgelist(g: Graph, names: list[str] | None = None) -> str:
    """Edge-list text; always carries an ``n`` header so isolated vertices survive.

    With ``names`` each line is ``u v  # name_u name_v``.
    """
    lines = [f"n {g.vertex_count}"]
    for u, v in g.sorted_edges():
        if names is None:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v}  # {names[u]} {names[v]}")
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, names: list[str] | None = None, graph_name: str = "G") -> str:
    lines = [f"graph {graph_name} {{"]
    for v in range(g.vertex_count):
        label = names[v] if names is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
