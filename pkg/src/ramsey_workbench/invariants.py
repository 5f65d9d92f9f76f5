"""Exact graph and hypergraph parameters.

All solvers are deterministic for a fixed input and return witnesses where
a witness makes sense (an optimal colouring, a clique, a circuit).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import total_ordering

from .graph_core import Graph, Hypergraph, iter_bits


@total_ordering
class _Infinite:
    """Sentinel for the odd girth of a bipartite graph and the girth of a hyperforest."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("infinite")

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


@dataclass(frozen=True)
class VertexColouring:
    """Vertex ``v`` gets colour ``colours[v]`` in ``1..t``."""

    colours: tuple[int, ...]
    t: int

    def __post_init__(self):
        if any(not 1 <= c <= self.t for c in self.colours):
            raise ValueError(f"colours must lie in 1..{self.t}")

    def is_proper(self, g: Graph) -> bool:
        if len(self.colours) != g.n:
            return False
        return all(self.colours[u] != self.colours[v] for u, v in g.edges)

    def class_of(self, colour: int) -> list[int]:
        return [v for v, c in enumerate(self.colours) if c == colour]

    def to_dict(self) -> dict:
        return {"t": self.t, "colours": list(self.colours)}

    @classmethod
    def from_dict(cls, d: dict) -> "VertexColouring":
        return cls(tuple(int(c) for c in d["colours"]), int(d["t"]))


@dataclass(frozen=True)
class Circuit:
    """Distinct vertices v_1..v_s and distinct hyperedges e_1..e_s with
    v_i, v_{i+1} in e_i and v_s, v_1 in e_s."""

    vertices: tuple[int, ...]
    hyperedges: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid(self, h: Hypergraph) -> bool:
        s = len(self.vertices)
        if s < 2 or len(self.hyperedges) != s:
            return False
        if len(set(self.vertices)) != s or len(set(self.hyperedges)) != s:
            return False
        present = set(h.hyperedges)
        for i, e in enumerate(self.hyperedges):
            if e not in present:
                return False
            if self.vertices[i] not in e or self.vertices[(i + 1) % s] not in e:
                return False
        return True

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "hyperedges": [list(e) for e in self.hyperedges]}


# ------------------------------------------------------------------ cliques

def _colour_sort(adj, cand: int) -> tuple[list[int], list[int]]:
    order, bounds = [], []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        q = rest
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            rest &= ~low
            order.append(v)
            bounds.append(colour)
    return order, bounds


def _max_clique(adj, cand: int) -> list[int]:
    """Tomita-style branch and bound with greedy-colouring bounds."""
    best: list[int] = []

    def expand(chosen: list[int], p: int) -> None:
        nonlocal best
        order, bounds = _colour_sort(adj, p)
        for i in range(len(order) - 1, -1, -1):
            if len(chosen) + bounds[i] <= len(best):
                return
            v = order[i]
            sub = p & adj[v]
            chosen.append(v)
            if sub:
                expand(chosen, sub)
            elif len(chosen) > len(best):
                best = sorted(chosen)
            chosen.pop()
            p &= ~(1 << v)

    if cand:
        expand([], cand)
    return best


def maximum_clique(g: Graph) -> list[int]:
    return _max_clique(g.adj, g.all_mask)


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def maximum_independent_set(g: Graph) -> list[int]:
    full = g.all_mask
    comp = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    return _max_clique(comp, full)


# --------------------------------------------------------------- colouring

def _k_colouring(adj, n: int, k: int, within: int | None = None) -> list[int] | None:
    """DSATUR backtracking; returns 0-based colours (``-1`` outside ``within``) or None."""
    verts = (1 << n) - 1 if within is None else within
    colour = [-1] * n
    classes = [0] * k
    uncoloured = verts

    def pick() -> int:
        best_v, best_key = -1, None
        for v in iter_bits(uncoloured):
            row = adj[v]
            sat = sum(1 for c in classes if c & row)
            key = (sat, (row & uncoloured).bit_count(), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def solve(used: int) -> bool:
        nonlocal uncoloured
        if not uncoloured:
            return True
        v = pick()
        row = adj[v]
        bit = 1 << v
        uncoloured &= ~bit
        for c in range(min(k, used + 1)):
            if classes[c] & row:
                continue
            classes[c] |= bit
            colour[v] = c
            if solve(max(used, c + 1)):
                return True
            classes[c] &= ~bit
        colour[v] = -1
        uncoloured |= bit
        return False

    return colour if solve(0) else None


def is_k_colourable(g: Graph, k: int, within: int | None = None) -> bool:
    if k <= 0:
        return (g.all_mask if within is None else within) == 0
    return _k_colouring(g.adj, g.n, k, within) is not None


def chromatic_number(g: Graph) -> tuple[int, VertexColouring]:
    """Exact chromatic number together with an optimal proper colouring."""
    if g.n == 0:
        return 0, VertexColouring((), 0)
    lower = max(1, clique_number(g))
    k = lower
    while True:
        col = _k_colouring(g.adj, g.n, k)
        if col is not None:
            # the search may leave high colours unused only if k > chi, which
            # cannot happen as every smaller k was refuted
            return k, VertexColouring(tuple(c + 1 for c in col), k)
        k += 1


# --------------------------------------------------------------- odd girth

def odd_girth(g: Graph):
    """Length of the shortest odd cycle, or ``INFINITE`` for bipartite graphs.

    From each root, BFS layers are scanned for an edge inside one layer; an
    edge inside layer ``d`` closes an odd walk of length ``2d + 1``.  The
    minimum over all roots is exact because a root on a shortest odd cycle
    sees that cycle directly.
    """
    best = INFINITE
    adj = g.adj
    for r in range(g.n):
        dist = {r: 0}
        layer = [r]
        d = 0
        while layer:
            if best is not INFINITE and 2 * d + 1 >= best:
                break
            layer_mask = 0
            for v in layer:
                layer_mask |= 1 << v
            if any(adj[v] & layer_mask for v in layer):
                best = 2 * d + 1
                break
            nxt = []
            for v in layer:
                for w in iter_bits(adj[v]):
                    if w not in dist:
                        dist[w] = d + 1
                        nxt.append(w)
            layer = nxt
            d += 1
    return best


def is_bipartite(g: Graph) -> bool:
    return odd_girth(g) is INFINITE


# --------------------------------------------------------------- parameter a

def a_parameter(g: Graph) -> tuple[int, VertexColouring]:
    """Minimum size of colour class 1 over proper colourings in colours 1..chi(g).

    Branch and bound over colourings.  Colours 2..chi are interchangeable,
    so a new one is opened only in increasing order; colour 1 is tried last
    at every vertex so small class-1 colourings are met early.
    """
    if g.n == 0:
        raise ValueError("a(G) needs at least one vertex")
    chi, base = chromatic_number(g)
    sizes = {c: len(base.class_of(c)) for c in range(1, chi + 1)}
    smallest = min(sizes, key=lambda c: (sizes[c], c))
    swap = {smallest: 1, 1: smallest}
    best_cols = [swap.get(c, c) for c in base.colours]
    best = sizes[smallest]

    adj = g.adj
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    classes = [0] * (chi + 1)
    cols = [0] * g.n

    def dfs(i: int, opened: int, count1: int) -> None:
        nonlocal best, best_cols
        if count1 >= best:
            return
        if i == g.n:
            best, best_cols = count1, cols.copy()
            return
        v = order[i]
        row, bit = adj[v], 1 << v
        for c in range(2, min(chi, opened + 2) + 1):
            if classes[c] & row:
                continue
            classes[c] |= bit
            cols[v] = c
            dfs(i + 1, max(opened, c - 1), count1)
            classes[c] &= ~bit
        if not classes[1] & row:
            classes[1] |= bit
            cols[v] = 1
            dfs(i + 1, opened, count1 + 1)
            classes[1] &= ~bit
        cols[v] = 0

    dfs(0, 0, 0)
    assert best >= 1 or chi == 0, "empty colour-1 class would give a (chi-1)-colouring"
    witness = VertexColouring(tuple(best_cols), chi)
    assert witness.is_proper(g) and len(witness.class_of(1)) == best
    return best, witness


# -------------------------------------------------------------- hypergraphs

def shortest_circuit(h: Hypergraph, limit: int | None = None) -> Circuit | None:
    """A shortest circuit of ``h`` (length at most ``limit`` if given), or None.

    Circuits are exactly the cycles of the vertex/hyperedge incidence graph;
    a circuit of length ``s`` is an incidence cycle of length ``2s``.  BFS
    from every vertex node; the best non-tree edge over all roots closes a
    shortest cycle whose two tree paths meet only at the root.
    """
    n = h.n
    m = len(h.hyperedges)
    nbrs: list[tuple[int, ...]] = [tuple(n + i for i in h.incidence[v]) for v in range(n)]
    nbrs += [tuple(e) for e in h.hyperedges]
    cap = 2 * limit if limit is not None else None
    best_len = None
    best = None
    for r in range(n):
        if not h.incidence[r]:
            continue
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if best_len is not None and 2 * dx >= best_len:
                break
            if cap is not None and 2 * dx > cap:
                break
            for y in nbrs[x]:
                if y == parent[x]:
                    continue
                if y in dist:
                    length = dx + dist[y] + 1
                    if (cap is None or length <= cap) and (best_len is None or length < best_len):
                        best_len, best = length, (r, x, y, dict(parent))
                else:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
    if best is None:
        return None
    r, x, y, parent = best
    px, py = [x], [y]
    while px[-1] != r:
        px.append(parent[px[-1]])
    while py[-1] != r:
        py.append(parent[py[-1]])
    cycle = px[::-1] + py[:-1]  # r ... x, y ... back towards r
    assert len(set(cycle)) == len(cycle)
    verts = tuple(cycle[0::2])
    edges = tuple(h.hyperedges[i - n] for i in cycle[1::2])
    circuit = Circuit(verts, edges)
    assert circuit.is_valid(h) and m >= len(circuit)
    return circuit


def hypergraph_girth(h: Hypergraph):
    c = shortest_circuit(h)
    return INFINITE if c is None else len(c)


def _independent_search(h: Hypergraph, target: int | None) -> list[int]:
    """Largest hyperedge-free vertex set, or any of size ``target`` if given."""
    if h.k == 2:
        g = Graph(h.n, h.hyperedges)
        return maximum_independent_set(g)
    masks = h.masks
    inc = h.incidence
    best: list[int] = []
    chosen: list[int] = []
    done = False

    def grow(inside: int, cand: int) -> None:
        nonlocal best, done
        if len(chosen) > len(best):
            best = sorted(chosen)
            if target is not None and len(best) >= target:
                done = True
                return
        while cand and not done:
            if len(chosen) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            now = inside | low
            blocked = 0
            for i in inc[v]:
                rest = masks[i] & ~now
                if rest and rest & (rest - 1) == 0:
                    blocked |= rest
            chosen.append(v)
            grow(now, cand & ~blocked)
            chosen.pop()

    grow(0, (1 << h.n) - 1)
    return best


def maximum_hypergraph_independent_set(h: Hypergraph) -> list[int]:
    return _independent_search(h, None)


def hypergraph_independence_number(h: Hypergraph) -> int:
    """Size of the largest vertex set containing no hyperedge entirely."""
    return len(_independent_search(h, None))


def has_independent_set_of_size(h: Hypergraph, size: int) -> bool:
    if size <= 0:
        return True
    if size > h.n:
        return False
    return len(_independent_search(h, size)) >= size
