"""Serialisation: graph6, JSON and DOT for graphs, JSON for hypergraphs.

Every writer here is canonical (fixed key order, sorted edges, no trailing
spaces) so that written files round-trip byte-identically.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .graph_core import Graph, Hypergraph


class FormatError(ValueError):
    """Malformed input; ``position`` is a byte offset or ``(line, column)``."""

    def __init__(self, message: str, position=None):
        self.position = position
        where = ""
        if isinstance(position, tuple):
            where = f" at line {position[0]}, column {position[1]}"
        elif position is not None:
            where = f" at byte {position}"
        super().__init__(message + where)


# ------------------------------------------------------------------ graph6

def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return b"~" + bytes(63 + ((n >> s) & 63) for s in (12, 6, 0))
    if n < 68719476736:
        return b"~~" + bytes(63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return (_encode_n(g.n) + bytes(body)).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    for pos, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise FormatError(f"invalid graph6 character {chr(ch)!r}", pos)
    if not data:
        raise FormatError("empty graph6 string", 0)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field", len(data))
        n, pos = 0, 8
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size field", len(data))
        n, pos = 0, 4
        for ch in data[1:4]:
            n = (n << 6) | (ch - 63)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(data) - pos != need:
        raise FormatError(f"expected {need} body bytes for n={n}, got {len(data) - pos}", pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# -------------------------------------------------------------------- JSON

def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(d: dict) -> Graph:
    try:
        n = int(d["n"])
        edges = [(int(u), int(v)) for u, v in d["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad graph object: {exc}") from exc
    for u, v in edges:
        if not u < v:
            raise FormatError(f"edge {[u, v]} must satisfy u < v")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {"n": h.n, "k": h.k, "hyperedges": [list(e) for e in h.hyperedges]}


def hypergraph_from_dict(d: dict) -> Hypergraph:
    try:
        return Hypergraph.from_edges(int(d["n"]), int(d["k"]), d["hyperedges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad hypergraph object: {exc}") from exc


def dumps(obj) -> str:
    """Canonical JSON text (compact separators, trailing newline)."""
    return json.dumps(obj, separators=(",", ":")) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, (exc.lineno, exc.colno)) from exc


def graph_to_json(g: Graph) -> str:
    return dumps(graph_to_dict(g))


def graph_from_json(text: str) -> Graph:
    return graph_from_dict(loads(text))


def hypergraph_to_json(h: Hypergraph) -> str:
    return dumps(hypergraph_to_dict(h))


def hypergraph_from_json(text: str) -> Hypergraph:
    return hypergraph_from_dict(loads(text))


# --------------------------------------------------------------------- DOT

def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------- files

def read_graph(path: str | os.PathLike) -> Graph:
    """Read a graph from a JSON object or a single graph6 line."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise FormatError(f"expected one graph6 line, found {len(lines)}", (1, 1))
    return from_graph6(lines[0])


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "json":
        return graph_to_json(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_atomic(path: str | os.PathLike, text: str) -> Path:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path
