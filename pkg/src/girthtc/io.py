"""Graph serialization: a small JSON schema, graph6, and DOT (emit only)."""
from __future__ import annotations

import json

from .graph import Graph, GraphError


class ParseError(ValueError):
    """Malformed serialized input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def graph_to_dict(g: Graph) -> dict:
    d: dict = {"n": g.n}
    if g.labels is not None:
        d["labels"] = list(g.labels)
    d["edges"] = [[u, v] for u, v in g.edges]
    return d


def graph_from_dict(d: dict) -> Graph:
    try:
        n = int(d["n"])
        edges = [(int(u), int(v)) for u, v in d["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph object: {exc}") from exc
    try:
        return Graph.from_edges(n, edges, d.get("labels"))
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), separators=(",", ":"))


def from_json(text: str) -> Graph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from exc
    if isinstance(d, dict) and "graph" in d:
        d = d["graph"]
    if not isinstance(d, dict):
        raise ParseError("expected a JSON object")
    return graph_from_dict(d)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("graph6 encoding here supports at most 62 vertices")
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", i)
    n = ord(s[0]) - 63
    if n > 62:
        raise ParseError("graph6 with more than 62 vertices is not supported", 0)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise ParseError(f"expected {need} data bytes, got {len(s) - 1}", min(len(s), need + 1))
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, vertex_attrs: dict[int, str] | None = None,
           edge_attrs: dict[tuple[int, int], str] | None = None) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        attr = [f'label="{g.label(v)}"']
        if vertex_attrs and v in vertex_attrs:
            attr.append(vertex_attrs[v])
        lines.append(f"  {v} [{', '.join(attr)}];")
    for u, v in g.edges:
        extra = f" [{edge_attrs[(u, v)]}]" if edge_attrs and (u, v) in edge_attrs else ""
        lines.append(f"  {u} -- {v}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph(data: str | bytes, fmt: str = "json") -> Graph:
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    if fmt == "json":
        return from_json(data)
    if fmt == "graph6":
        return from_graph6(data)
    raise ValueError(f"cannot parse format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(g)
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}")
