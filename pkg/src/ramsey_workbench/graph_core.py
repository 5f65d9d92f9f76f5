"""Graph and hypergraph substrate.

Vertices are the dense labels ``0..n-1``.  Adjacency is kept as one Python
integer bitmask per vertex, so pair queries and neighbourhood intersections
are single bit operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1``.

    ``edges`` is the sorted tuple of pairs ``(u, v)`` with ``u < v``.  Build
    graphs through :meth:`from_edges`, which normalises arbitrary input.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"invalid edge {e} for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError("edges must be sorted and distinct")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> "Graph":
        pairs = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            pairs.add((u, v) if u < v else (v, u))
        return cls(n, tuple(sorted(pairs)))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class Hypergraph:
    """k-uniform hypergraph; hyperedges are sorted tuples, sorted overall."""

    n: int
    k: int
    hyperedges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("uniformity must be at least 2")
        prev = None
        for e in self.hyperedges:
            if len(e) != self.k or len(set(e)) != self.k:
                raise ValueError(f"hyperedge {e} is not a {self.k}-set")
            if tuple(sorted(e)) != tuple(e):
                raise ValueError(f"hyperedge {e} is not sorted")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"hyperedge {e} out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError("hyperedges must be sorted and distinct")
            prev = e

    @classmethod
    def from_edges(cls, n: int, k: int, hyperedges: Iterable[Iterable[int]]) -> "Hypergraph":
        normal = {tuple(sorted(e)) for e in hyperedges}
        return cls(n, k, tuple(sorted(normal)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.hyperedges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the hyperedges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.hyperedges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def __len__(self) -> int:
        return len(self.hyperedges)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, m={len(self.hyperedges)})"


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map: pattern vertex ``i`` goes to ``image[i]``."""

    domain_size: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.domain_size:
            raise ValueError("image length must equal domain size")
        if len(set(self.image)) != len(self.image):
            raise ValueError("embedding is not injective")

    def is_valid(self, pattern: Graph, host: Graph) -> bool:
        if pattern.n != self.domain_size:
            return False
        if any(not (0 <= x < host.n) for x in self.image):
            return False
        return all(host.has_edge(self.image[u], self.image[v]) for u, v in pattern.edges)


# ---------------------------------------------------------------- builders

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(r: int) -> Graph:
    return Graph(r, tuple(combinations(range(r), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(r: int, m: int) -> Graph:
    """K_r(m): ``r`` consecutive blocks of ``m`` vertices, complete between blocks."""
    n = r * m
    edges = [(u, v) for u, v in combinations(range(n), 2) if u // m != v // m]
    return Graph(n, tuple(edges))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_join(a, empty_graph(b))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H; the vertices of ``h`` are shifted up by ``g.n``."""
    shift = g.n
    return Graph(g.n + h.n, g.edges + tuple((u + shift, v + shift) for u, v in h.edges))


def complete_join(a_size: int, g: Graph) -> Graph:
    """Join ``a_size`` independent vertices completely onto a copy of ``g``.

    Vertices ``0..a_size-1`` form the independent side; ``g`` occupies
    ``a_size..a_size+g.n-1`` with its labels shifted by ``a_size``.
    """
    if a_size < 0:
        raise ValueError("a_size must be non-negative")
    cross = [(a, a_size + b) for a in range(a_size) for b in range(g.n)]
    inner = [(u + a_size, v + a_size) for u, v in g.edges]
    return Graph(a_size + g.n, tuple(sorted(cross + inner)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """G[S], relabelled order-preservingly onto ``0..|S|-1``."""
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(verts), tuple(edges))


def spanning_subgraph(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(g.n, edges)


def is_subgraph(small: Graph, big: Graph) -> bool:
    """Same-vertex-set containment (used for monotonicity checks)."""
    return small.n <= big.n and all(big.has_edge(u, v) for u, v in small.edges)


# ---------------------------------------------------------- subgraph search

def _search_order(pattern: Graph) -> list[int]:
    """Connectivity-first ordering: each vertex has as many earlier neighbours as possible."""
    remaining = set(range(pattern.n))
    order: list[int] = []
    placed = 0
    while remaining:
        best = max(
            remaining,
            key=lambda v: ((pattern.adj[v] & placed).bit_count(), pattern.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def iter_subgraph_copies(host: Graph, pattern: Graph) -> Iterator[Embedding]:
    """Every injective map sending pattern edges onto host edges, in a fixed order."""
    if pattern.n > host.n:
        return
    order = _search_order(pattern)
    back = []  # earlier-placed neighbours of each vertex in the order
    for i, p in enumerate(order):
        back.append([q for q in order[:i] if pattern.has_edge(p, q)])
    host_deg = [host.degree(v) for v in range(host.n)]
    by_degree = [0] * (pattern.n)
    for i, p in enumerate(order):
        d = pattern.degree(p)
        by_degree[i] = mask_of(v for v in range(host.n) if host_deg[v] >= d)
    image = [-1] * pattern.n
    hadj = host.adj

    def extend(i: int, used: int) -> Iterator[Embedding]:
        if i == len(order):
            yield Embedding(pattern.n, tuple(image))
            return
        cand = by_degree[i] & ~used
        for q in back[i]:
            cand &= hadj[image[q]]
        p = order[i]
        for v in iter_bits(cand):
            image[p] = v
            yield from extend(i + 1, used | (1 << v))
        image[p] = -1

    yield from extend(0, 0)


def find_subgraph_copy(host: Graph, pattern: Graph) -> Embedding | None:
    """One (not necessarily induced) copy of ``pattern`` in ``host``, or None."""
    return next(iter_subgraph_copies(host, pattern), None)


def copy_edge_sets(host: Graph, pattern: Graph) -> list[frozenset[tuple[int, int]]]:
    """Distinct host edge sets that are images of ``pattern`` (automorphisms collapsed)."""
    seen: dict[frozenset, None] = {}
    for emb in iter_subgraph_copies(host, pattern):
        img = emb.image
        es = frozenset(
            (img[u], img[v]) if img[u] < img[v] else (img[v], img[u]) for u, v in pattern.edges
        )
        seen.setdefault(es, None)
    return list(seen)


# --------------------------------------------------------------- cycles

def cycles_up_to(g: Graph, n_max: int) -> list[tuple[int, ...]]:
    """All cycles of length 3..n_max, each once.

    A cycle is reported starting at its smallest vertex, with the second
    vertex smaller than the last one (fixing the reflection).
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    out: list[tuple[int, ...]] = []
    adj = g.adj
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        path = [s]

        def walk(v: int, used: int) -> None:
            if len(path) >= 3 and (adj[v] >> s) & 1 and path[1] < path[-1]:
                out.append(tuple(path))
            if len(path) == n_max:
                return
            for w in iter_bits(adj[v] & higher & ~used):
                path.append(w)
                walk(w, used | (1 << w))
                path.pop()

        walk(s, 1 << s)
    return out


def connected_subsets(g: Graph, max_size: int, within: int | None = None) -> Iterator[int]:
    """Each connected vertex subset of size 1..max_size exactly once, as a bitmask.

    Wernicke's ESU enumeration; ``within`` optionally restricts to a vertex mask.
    """
    adj = g.adj
    allowed = g.all_mask if within is None else within

    def extend(sub: int, size: int, ext: int, nb: int, root: int) -> Iterator[int]:
        yield sub
        if size == max_size:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            excl = adj[w] & ~(sub | nb) & allowed & ~((1 << (root + 1)) - 1)
            yield from extend(sub | low, size + 1, ext | excl, nb | adj[w], root)

    for v in iter_bits(allowed):
        above = ~((1 << (v + 1)) - 1)
        yield from extend(1 << v, 1, adj[v] & allowed & above, adj[v] | (1 << v), v)
