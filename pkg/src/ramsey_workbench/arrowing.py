"""Edge colourings, the arrowing relation F -> (H)_q, and good-colouring profiles."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import networkx as nx
import numpy as np

from .formats import FormatError, to_graph6
from .graph_core import (
    Embedding,
    Graph,
    connected_subsets,
    copy_edge_sets,
    find_subgraph_copy,
    induced_subgraph,
    iter_bits,
)
from .invariants import _k_colouring, is_bipartite


class BudgetExceeded(RuntimeError):
    """A search ran out of its node (or size) budget; the answer is unknown."""

    def __init__(self, message: str, nodes: int | None = None, stage=None):
        super().__init__(message)
        self.nodes = nodes
        self.stage = stage


@dataclass(frozen=True)
class EdgeColouring:
    """Total map from the edges of ``graph`` to colours ``1..q``.

    ``colours[i]`` is the colour of ``graph.edges[i]``.
    """

    graph: Graph
    colours: tuple[int, ...]
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be positive")
        if len(self.colours) != self.graph.num_edges:
            raise ValueError("every edge needs exactly one colour")
        if any(not 1 <= c <= self.q for c in self.colours):
            raise ValueError(f"colours must lie in 1..{self.q}")

    @classmethod
    def from_mapping(cls, graph: Graph, mapping, q: int) -> "EdgeColouring":
        cols = []
        for u, v in graph.edges:
            if (u, v) in mapping:
                cols.append(mapping[(u, v)])
            elif (v, u) in mapping:
                cols.append(mapping[(v, u)])
            else:
                raise ValueError(f"edge {(u, v)} has no colour")
        return cls(graph, tuple(cols), q)

    @classmethod
    def constant(cls, graph: Graph, q: int, colour: int = 1) -> "EdgeColouring":
        return cls(graph, (colour,) * graph.num_edges, q)

    def colour(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.colours[self.graph.edge_index[key]]

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "colours": {f"{u}-{v}": c for (u, v), c in zip(self.graph.edges, self.colours)},
        }

    @classmethod
    def from_dict(cls, graph: Graph, d: dict) -> "EdgeColouring":
        try:
            q = int(d["q"])
            raw = {}
            for key, c in d["colours"].items():
                u, v = (int(x) for x in key.split("-"))
                raw[(u, v)] = int(c)
        except (KeyError, ValueError, AttributeError) as exc:
            raise FormatError(f"bad edge colouring object: {exc}") from exc
        if set(raw) != set(graph.edges):
            raise FormatError("colouring keys do not match the edge set")
        return cls.from_mapping(graph, raw, q)


def random_colouring(g: Graph, q: int, rng: np.random.Generator) -> EdgeColouring:
    cols = rng.integers(1, q + 1, size=g.num_edges)
    return EdgeColouring(g, tuple(int(c) for c in cols), q)


def colour_class(c: EdgeColouring, i: int) -> Graph:
    """Spanning subgraph of ``c.graph`` made of the colour-``i`` edges."""
    if not 1 <= i <= c.q:
        raise ValueError(f"colour {i} outside 1..{c.q}")
    return Graph(c.graph.n, tuple(e for e, x in zip(c.graph.edges, c.colours) if x == i))


def find_monochromatic_copy(c: EdgeColouring, h: Graph) -> tuple[int, Embedding] | None:
    for i in range(1, c.q + 1):
        emb = find_subgraph_copy(colour_class(c, i), h)
        if emb is not None:
            return i, emb
    return None


# ------------------------------------------------------------------ arrows

@dataclass(frozen=True)
class ArrowingResult:
    arrows: bool
    certificate: EdgeColouring | None
    nodes: int

    def __bool__(self) -> bool:
        return self.arrows


def _core(h: Graph) -> Graph:
    """``h`` without its isolated vertices."""
    keep = [v for v in range(h.n) if h.adj[v]]
    return induced_subgraph(h, keep)


def arrows(f: Graph, h: Graph, q: int = 2, budget_nodes: int | None = None) -> ArrowingResult:
    """Decide whether every ``q``-colouring of ``f`` has a monochromatic ``h``.

    Depth-first over the edges of ``f`` in their sorted order.  A branch dies
    as soon as it completes a monochromatic copy; copies are precomputed as
    edge bitmasks and checked only when their last edge gets coloured.
    Colour permutations are broken by opening colours in increasing order.
    The first full colouring reached is re-checked and returned as the
    certificate of non-arrowing.

    Raises :class:`BudgetExceeded` when more than ``budget_nodes`` partial
    colourings are visited.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if f.n < h.n:
        cert = EdgeColouring.constant(f, q)
        return ArrowingResult(False, cert, 0)
    core = _core(h)
    if core.num_edges == 0:
        return ArrowingResult(True, None, 0)

    idx = f.edge_index
    by_last: list[list[int]] = [[] for _ in range(f.num_edges)]
    for es in copy_edge_sets(f, core):
        mask = 0
        last = -1
        for e in es:
            i = idx[e]
            mask |= 1 << i
            last = max(last, i)
        by_last[last].append(mask)

    m = f.num_edges
    cols = [0] * m
    classes = [0] * (q + 1)
    nodes = 0

    def dfs(e: int, opened: int) -> bool:
        nonlocal nodes
        if e == m:
            return True
        bit = 1 << e
        for c in range(1, min(q, opened + 1) + 1):
            nodes += 1
            if budget_nodes is not None and nodes > budget_nodes:
                raise BudgetExceeded(f"arrowing search exceeded {budget_nodes} nodes", nodes)
            now = classes[c] | bit
            if any(mask & now == mask for mask in by_last[e]):
                continue
            classes[c] = now
            cols[e] = c
            if dfs(e + 1, max(opened, c)):
                return True
            classes[c] &= ~bit
        return False

    if not dfs(0, 0):
        return ArrowingResult(True, None, nodes)
    cert = EdgeColouring(f, tuple(cols), q)
    if find_monochromatic_copy(cert, h) is not None:
        raise AssertionError("certificate contains a monochromatic copy")
    return ArrowingResult(False, cert, nodes)


# -------------------------------------------------------------- P-profiles

@dataclass(frozen=True)
class PProfile:
    """Every colour-``i`` subgraph on at most ``n_cap`` vertices is ``bounds[i-1]``-colourable."""

    n_cap: int
    bounds: tuple[int, ...]

    def __post_init__(self):
        if self.n_cap < 2:
            raise ValueError("n_cap must be at least 2")
        if len(self.bounds) < 2 or any(k < 1 for k in self.bounds):
            raise ValueError("need at least two positive bounds")

    @property
    def q(self) -> int:
        return len(self.bounds)


def _fits(g: Graph, k: int, sub: int) -> bool:
    if k >= sub.bit_count():
        return True
    if k == 1:
        return not any(g.adj[v] & sub for v in iter_bits(sub))
    if k == 2:
        return is_bipartite(induced_subgraph(g, iter_bits(sub)))
    return _k_colouring(g.adj, g.n, k, sub) is not None


def _globally_fits(g: Graph, k: int) -> bool:
    """Cheap sufficient test: the whole class is k-colourable."""
    if k == 1:
        return g.num_edges == 0
    if k == 2:
        return is_bipartite(g)
    if g.n <= 40:
        return _k_colouring(g.adj, g.n, k) is not None
    return False


def verify_p_profile(
    c: EdgeColouring, p: PProfile
) -> tuple[bool, tuple[int, tuple[int, ...]] | None]:
    """Check that ``c`` is an ``(N, k_1..k_q)``-good colouring.

    Only connected vertex sets are enumerated: a violating set always has a
    violating component, and chromatic number is monotone, so it suffices to
    test connected sets of exactly ``N`` vertices plus whole components that
    are smaller.  On failure the witness is the lexicographically least
    violating connected set of the first failing colour.
    """
    if c.q != p.q:
        raise ValueError("colouring and profile disagree on q")
    for i in range(1, c.q + 1):
        k = p.bounds[i - 1]
        cls = colour_class(c, i)
        if _globally_fits(cls, k):
            continue
        bad = False
        for sub in connected_subsets(cls, p.n_cap):
            size = sub.bit_count()
            if size <= k:
                continue
            if size < p.n_cap:
                nb = 0
                for v in iter_bits(sub):
                    nb |= cls.adj[v]
                if nb & ~sub:
                    continue
            if not _fits(cls, k, sub):
                bad = True
                break
        if not bad:
            continue
        least = None
        for sub in connected_subsets(cls, p.n_cap):
            if sub.bit_count() > k and not _fits(cls, k, sub):
                key = tuple(iter_bits(sub))
                if least is None or key < least:
                    least = key
        return False, (i, least)
    return True, None


# -------------------------------------------------------------- separators

ATLAS_MAX_VERTICES = 7


def catalogue_graphs(n_max: int) -> list[Graph]:
    """All graphs on 1..n_max vertices up to isomorphism.

    Ordered by vertex count, then by graph6 string of the atlas labelling.
    """
    if n_max > ATLAS_MAX_VERTICES:
        raise ValueError(f"catalogue only covers up to {ATLAS_MAX_VERTICES} vertices")
    out = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if 1 <= n <= n_max:
            out.append(Graph.from_edges(n, nxg.edges()))
    out.sort(key=lambda g: (g.n, to_graph6(g)))
    return out


def iter_separators(
    g: Graph, h: Graph, q: int, n_max: int, budget_nodes: int | None = None
) -> Iterator[Graph]:
    """Graphs F on at most ``n_max`` vertices with F -> (g)_q and not F -> (h)_q.

    A finite probe only: finding nothing up to ``n_max`` says nothing about
    whether ``g`` and ``h`` are Ramsey equivalent.
    """
    spent = 0

    def remaining():
        return None if budget_nodes is None else budget_nodes - spent

    for f in catalogue_graphs(n_max):
        if find_subgraph_copy(f, g) is None:
            continue
        r = arrows(f, g, q, remaining())
        spent += r.nodes
        if not r.arrows:
            continue
        r2 = arrows(f, h, q, remaining())
        spent += r2.nodes
        if r2.arrows:
            continue
        yield f


def find_separator(
    g: Graph, h: Graph, q: int, n_max: int, budget_nodes: int | None = None
) -> list[Graph]:
    return list(iter_separators(g, h, q, n_max, budget_nodes))


def all_colourings(g: Graph, q: int) -> Iterator[EdgeColouring]:
    """Every q-colouring of ``g`` (exponential; for oracles at desk scale)."""
    from itertools import product

    for cols in product(range(1, q + 1), repeat=g.num_edges):
        yield EdgeColouring(g, cols, q)


def partition_bounds(total: int, q: int) -> list[tuple[int, ...]]:
    """All q-tuples of positive integers summing to ``total``, in lexicographic order."""
    out = []
    for cuts in combinations(range(1, total), q - 1):
        parts = [b - a for a, b in zip((0,) + cuts, cuts + (total,))]
        out.append(tuple(parts))
    return sorted(out)

