"""Constructive machinery: high-girth hypergraphs, the blow-up L(G, eps, N),
the F_i tower, good colourings, focussing, witness extraction and the
construction separating graphs by the parameter a.

Vertex numbering conventions (all traces rely on them):

* a blow-up has the vertex set of its backing hypergraph; base vertex ``i``
  goes to the ``i``-th smallest vertex of each hyperedge;
* a join ``complete_join(a, L)`` puts the independent side on ``0..a-1`` and
  shifts ``L`` up by ``a``.

All epsilon arithmetic uses :class:`fractions.Fraction`.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, floor
from typing import Sequence

import numpy as np

from .arrowing import BudgetExceeded, EdgeColouring
from .formats import (
    FormatError,
    graph_from_dict,
    graph_to_dict,
    hypergraph_from_dict,
    hypergraph_to_dict,
)
from .graph_core import (
    Embedding,
    Graph,
    Hypergraph,
    complete_join,
    cycles_up_to,
    empty_graph,
    find_subgraph_copy,
    induced_subgraph,
    mask_of,
)
from .invariants import (
    a_parameter,
    chromatic_number,
    has_independent_set_of_size,
    hypergraph_girth,
    hypergraph_independence_number,
)


class SizeBudgetExceeded(BudgetExceeded):
    """A construction would exceed its vertex budget; ``stage`` names the level reached."""


class ExtractionFailure(RuntimeError):
    """No backing hyperedge fits inside the focussed set.

    Only possible when the blow-up was built with an epsilon larger than the
    focussing bound ``q ** -|A|`` can support (an eps override).
    """


def as_fraction(eps) -> Fraction:
    if isinstance(eps, str):
        eps = Fraction(eps.strip())
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    return eps


def default_epsilon(q: int, m: int) -> Fraction:
    """q ** (-q m); for q = 2 this is 2 ** (-2 m)."""
    return Fraction(1, q ** (q * m))


def min_dense_size(eps: Fraction, n: int) -> int:
    """Smallest integer size that is at least ``eps * n``."""
    return ceil(Fraction(eps) * n)


# --------------------------------------------------------- hypergraph search

def _short_circuit_with(kept_inc: list[list[int]], kept: list[tuple[int, ...]], e, n_cap: int) -> bool:
    """Would adding hyperedge ``e`` close a circuit of length at most ``n_cap``?

    A shortest kept path between two distinct vertices of ``e`` using ``j``
    hyperedges gives a circuit of length ``j + 1`` through ``e``.
    """
    members = set(e)
    for x in e:
        # BFS over vertices; depth counts hyperedges used
        depth = {x: 0}
        used_edges = set()
        queue = deque([x])
        while queue:
            v = queue.popleft()
            d = depth[v]
            if d + 1 > n_cap - 1:
                continue
            for ei in kept_inc[v]:
                if ei in used_edges:
                    continue
                used_edges.add(ei)
                for w in kept[ei]:
                    if w == v or w in depth:
                        continue
                    if w in members:
                        return True
                    depth[w] = d + 1
                    queue.append(w)
    return False


def random_high_girth_hypergraph(
    n: int, m: int, k: int, n_cap: int, rng: np.random.Generator
) -> Hypergraph:
    """Sample ``m`` distinct random k-sets, then delete hyperedges on short circuits.

    Hyperedges are scanned in sample order and a hyperedge is deleted when it
    closes a circuit of length at most ``n_cap`` with the ones kept so far,
    so the survivors have girth greater than ``n_cap``.
    """
    total = comb(n, k)
    m = min(m, total)
    if total <= 50_000:
        pool = list(combinations(range(n), k))
        picks = rng.choice(total, size=m, replace=False)
        sample = [pool[int(i)] for i in picks]
    else:
        seen: dict[tuple[int, ...], None] = {}
        while len(seen) < m:
            e = tuple(sorted(int(x) for x in rng.choice(n, size=k, replace=False)))
            seen.setdefault(e, None)
        sample = list(seen)
    kept: list[tuple[int, ...]] = []
    kept_inc: list[list[int]] = [[] for _ in range(n)]
    for e in sample:
        if _short_circuit_with(kept_inc, kept, e, n_cap):
            continue
        for v in e:
            kept_inc[v].append(len(kept))
        kept.append(e)
    return Hypergraph.from_edges(n, k, kept)


def hypergraph_search(
    k: int,
    n_cap: int,
    eps,
    *,
    seed: int | None = 0,
    rng: np.random.Generator | None = None,
    budget: int = 200,
    max_vertices: int = 40,
) -> Hypergraph:
    """A k-uniform hypergraph with girth > ``n_cap`` and independence < ``eps * n``.

    Vertex counts grow from the smallest one that could possibly work; for
    each count the number of sampled hyperedges grows geometrically up to the
    complete hypergraph.  Every returned hypergraph is re-verified exactly.
    Raises :class:`BudgetExceeded` after ``budget`` sampled candidates.
    """
    if k < 2 or n_cap < 2:
        raise ValueError("need k >= 2 and n_cap >= 2")
    eps = as_fraction(eps)
    rng = rng if rng is not None else np.random.default_rng(seed)
    # any k-1 vertices are independent, so eps * n must exceed k - 1
    n0 = max(k, floor((k - 1) / eps) + 1)
    attempts = 0
    for n in range(n0, max_vertices + 1):
        total = comb(n, k)
        sizes = {min(total, max(1, ceil(c * n / k))) for c in (1, 2, 4, 8, 16, 32, 64)}
        sizes.add(total)
        for m in sorted(sizes):
            if total > 50_000 and m > 5_000:
                continue
            attempts += 1
            if attempts > budget:
                raise BudgetExceeded(
                    f"no {k}-uniform hypergraph with girth > {n_cap} and independence "
                    f"< {eps}*n found within {budget} candidates (reached n={n})",
                    stage=n,
                )
            h = random_high_girth_hypergraph(n, m, k, n_cap, rng)
            if not h.hyperedges:
                continue
            if has_independent_set_of_size(h, min_dense_size(eps, n)):
                continue
            if hypergraph_girth(h) <= n_cap or hypergraph_independence_number(h) >= eps * n:
                raise AssertionError("search produced an unverified hypergraph")
            return h
    raise BudgetExceeded(
        f"no suitable hypergraph on at most {max_vertices} vertices", stage=max_vertices
    )


# ----------------------------------------------------------------- blow-up

@dataclass(frozen=True)
class BlowupTrace:
    """L(base, eps, n_cap): a copy of ``base`` inside every backing hyperedge."""

    base: Graph
    backing: Hypergraph
    embeddings: tuple[Embedding, ...]
    result: Graph
    eps: Fraction
    n_cap: int

    def check(self) -> None:
        if self.backing.k != self.base.n:
            raise ValueError("backing uniformity must equal the base vertex count")
        if len(self.embeddings) != len(self.backing.hyperedges):
            raise ValueError("one embedding per hyperedge")
        edges = set()
        for e, emb in zip(self.backing.hyperedges, self.embeddings):
            if tuple(sorted(emb.image)) != e:
                raise ValueError(f"embedding image {emb.image} is not hyperedge {e}")
            for u, v in self.base.edges:
                a, b = emb.image[u], emb.image[v]
                edges.add((a, b) if a < b else (b, a))
        if self.result != Graph(self.backing.n, tuple(sorted(edges))):
            raise ValueError("result is not the union of embedded copies")

    def to_dict(self) -> dict:
        return {
            "base": graph_to_dict(self.base),
            "backing": hypergraph_to_dict(self.backing),
            "embeddings": [list(emb.image) for emb in self.embeddings],
            "result": graph_to_dict(self.result),
            "eps": str(self.eps),
            "n_cap": self.n_cap,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BlowupTrace":
        try:
            base = graph_from_dict(d["base"])
            bt = cls(
                base=base,
                backing=hypergraph_from_dict(d["backing"]),
                embeddings=tuple(Embedding(base.n, tuple(x)) for x in d["embeddings"]),
                result=graph_from_dict(d["result"]),
                eps=as_fraction(d["eps"]),
                n_cap=int(d["n_cap"]),
            )
            bt.check()
        except FormatError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad blow-up trace: {exc}") from exc
        return bt


def blow_up(base: Graph, backing: Hypergraph) -> tuple[Graph, tuple[Embedding, ...]]:
    """Place a copy of ``base`` in every hyperedge (sorted-order embedding)."""
    if backing.k != base.n:
        raise ValueError("backing uniformity must equal the base vertex count")
    owner: dict[tuple[int, int], int] = {}
    embeddings = []
    for idx, e in enumerate(backing.hyperedges):
        embeddings.append(Embedding(base.n, tuple(e)))
        for u, v in base.edges:
            pair = (e[u], e[v])
            if pair in owner:
                raise ValueError(
                    f"edge {pair} claimed by hyperedges {owner[pair]} and {idx}; "
                    "backing girth must be at least 3"
                )
            owner[pair] = idx
    return Graph(backing.n, tuple(sorted(owner))), tuple(embeddings)


def build_l(
    g: Graph,
    eps,
    n_cap: int,
    backing: Hypergraph | None = None,
    *,
    seed: int | None = 0,
    rng: np.random.Generator | None = None,
    search_budget: int = 200,
    max_vertices: int = 40,
    check_backing: bool = True,
) -> BlowupTrace:
    """Blow ``g`` up over a high-girth, low-independence hypergraph.

    Any ``ceil(eps * n)`` vertices of the result contain a backing hyperedge
    and hence a copy of ``g``.
    """
    if g.n < 2:
        raise ValueError("the base graph needs at least two vertices")
    eps = as_fraction(eps)
    if backing is None:
        backing = hypergraph_search(
            g.n, n_cap, eps, seed=seed, rng=rng, budget=search_budget, max_vertices=max_vertices
        )
    elif check_backing:
        if backing.k != g.n:
            raise ValueError(f"backing must be {g.n}-uniform, got k={backing.k}")
        if hypergraph_girth(backing) <= n_cap:
            raise ValueError(f"backing girth must exceed {n_cap}")
        if hypergraph_independence_number(backing) >= eps * backing.n:
            raise ValueError(f"backing independence number must be below {eps}*n")
    result, embeddings = blow_up(g, backing)
    return BlowupTrace(g, backing, embeddings, result, eps, n_cap)


def replicate_colouring(bt: BlowupTrace, base_colours: EdgeColouring, shift: int = 0) -> dict:
    """Colour every embedded copy like ``base_colours``; keys are shifted result edges."""
    out = {}
    for emb in bt.embeddings:
        img = emb.image
        for (u, v), c in zip(bt.base.edges, base_colours.colours):
            a, b = img[u] + shift, img[v] + shift
            out[(a, b) if a < b else (b, a)] = c
    return out


def lemma5_check(bt: BlowupTrace) -> tuple[bool, tuple[int, ...] | None]:
    """Exhaustively confirm that every ``ceil(eps n)``-set contains a copy of the base.

    Uses plain subgraph search, independent of the backing hypergraph.
    """
    size = min_dense_size(bt.eps, bt.result.n)
    for s in combinations(range(bt.result.n), size):
        if find_subgraph_copy(induced_subgraph(bt.result, s), bt.base) is None:
            return False, s
    return True, None


def verify_lemma3(bt: BlowupTrace, n_cap: int) -> tuple[bool, tuple[int, ...] | None]:
    """Every short cycle is swallowed by each hyperedge that holds one of its edges.

    Returns ``(True, None)`` or ``(False, cycle)`` for a violating cycle of
    length at most ``n_cap`` in the blow-up.
    """
    if hypergraph_girth(bt.backing) <= n_cap:
        raise ValueError(f"backing girth must exceed {n_cap}")
    if n_cap < 3:
        return True, None
    holders: dict[tuple[int, int], list[int]] = {}
    for e, mask in zip(bt.backing.hyperedges, bt.backing.masks):
        for pair in combinations(e, 2):
            holders.setdefault(pair, []).append(mask)
    for cyc in cycles_up_to(bt.result, n_cap):
        cmask = mask_of(cyc)
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            for hmask in holders.get((a, b) if a < b else (b, a), ()):
                if cmask & ~hmask:
                    return False, cyc
    return True, None


# ------------------------------------------------------------------- tower

@dataclass(frozen=True)
class ConstructionTrace:
    """How F_level was assembled.

    Level 0 is ``m`` isolated vertices.  Level ``i >= 1`` joins
    ``a_set = 0..qm-1`` completely onto ``b_set``, which carries the blow-up
    ``inner`` of the previous level's graph (``prev``).
    """

    level: int
    m: int
    q: int
    n_cap: int
    eps: Fraction
    graph: Graph
    a_set: tuple[int, ...] = ()
    b_set: tuple[int, ...] = ()
    inner: BlowupTrace | None = None
    prev: "ConstructionTrace | None" = field(default=None, repr=False)

    def check(self) -> None:
        if self.level == 0:
            if self.graph != empty_graph(self.m) or self.inner or self.prev:
                raise ValueError("level 0 must be m isolated vertices")
            return
        if self.prev is None or self.inner is None or self.prev.level != self.level - 1:
            raise ValueError("missing previous level")
        if len(self.a_set) != self.q * self.m:
            raise ValueError("|A| must equal q*m")
        if self.inner.base != self.prev.graph:
            raise ValueError("blow-up base must be the previous level's graph")
        a = len(self.a_set)
        if self.a_set != tuple(range(a)) or self.b_set != tuple(range(a, a + self.inner.result.n)):
            raise ValueError("A and B must be the leading and trailing vertex blocks")
        if self.graph != complete_join(a, self.inner.result):
            raise ValueError("graph is not the join of A onto the blow-up")
        self.inner.check()
        self.prev.check()

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "m": self.m,
            "q": self.q,
            "n_cap": self.n_cap,
            "eps": str(self.eps),
            "a_set": list(self.a_set),
            "b_set": list(self.b_set),
            "inner": self.inner.to_dict() if self.inner else None,
            "graph": graph_to_dict(self.graph),
            "prev": self.prev.to_dict() if self.prev else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ConstructionTrace":
        try:
            t = cls(
                level=int(d["level"]),
                m=int(d["m"]),
                q=int(d["q"]),
                n_cap=int(d["n_cap"]),
                eps=as_fraction(d["eps"]),
                graph=graph_from_dict(d["graph"]),
                a_set=tuple(d["a_set"]),
                b_set=tuple(d["b_set"]),
                inner=BlowupTrace.from_dict(d["inner"]) if d["inner"] else None,
                prev=cls.from_dict(d["prev"]) if d["prev"] else None,
            )
            t.check()
        except FormatError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad construction trace: {exc}") from exc
        return t

    def levels(self) -> list["ConstructionTrace"]:
        out = []
        t: ConstructionTrace | None = self
        while t is not None:
            out.append(t)
            t = t.prev
        return out[::-1]


def _join_level(prev: ConstructionTrace, bt: BlowupTrace, q: int) -> ConstructionTrace:
    a = q * prev.m
    return ConstructionTrace(
        level=prev.level + 1,
        m=prev.m,
        q=q,
        n_cap=prev.n_cap,
        eps=prev.eps,
        graph=complete_join(a, bt.result),
        a_set=tuple(range(a)),
        b_set=tuple(range(a, a + bt.result.n)),
        inner=bt,
        prev=prev,
    )


def build_f_tower(
    m: int,
    n_cap: int,
    q: int = 2,
    levels: int = 1,
    eps_override=None,
    size_budget: int | None = None,
    *,
    seed: int | None = 0,
    search_budget: int = 200,
    max_vertices: int = 40,
    backings: dict[int, Hypergraph] | None = None,
) -> list[ConstructionTrace]:
    """F_0, ..., F_levels.

    F_0 is ``m`` isolated vertices and F_{i+1} joins ``q*m`` independent
    vertices onto L(F_i, eps, n_cap).  ``eps`` defaults to ``q**(-q*m)``;
    ``eps_override`` replaces it (construction invariants still hold, but
    extraction may then fail).  ``backings[i]`` supplies the hypergraph for
    L_i instead of searching.
    """
    if m < 2 or n_cap < 2 or q < 2:
        raise ValueError("need m >= 2, n_cap >= 2 and q >= 2")
    eps = as_fraction(eps_override) if eps_override is not None else default_epsilon(q, m)
    rng = np.random.default_rng(seed)
    backings = backings or {}
    tower = [ConstructionTrace(0, m, q, n_cap, eps, empty_graph(m))]
    for i in range(levels):
        prev = tower[-1]
        try:
            bt = build_l(
                prev.graph,
                eps,
                n_cap,
                backings.get(i),
                rng=rng,
                search_budget=search_budget,
                max_vertices=max_vertices,
            )
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"level {i + 1}: {exc}", stage=i + 1) from exc
        if size_budget is not None and q * m + bt.result.n > size_budget:
            raise SizeBudgetExceeded(
                f"F_{i + 1} would have {q * m + bt.result.n} vertices (budget {size_budget})",
                stage=i + 1,
            )
        tower.append(_join_level(prev, bt, q))
    return tower


# ----------------------------------------------------------- good colourings

def _check_bounds(bounds: Sequence[int], level: int, q: int) -> tuple[int, ...]:
    bounds = tuple(int(k) for k in bounds)
    if len(bounds) != q:
        raise ValueError(f"need {q} bounds, got {len(bounds)}")
    if any(k < 1 for k in bounds):
        raise ValueError("every bound must be at least 1")
    if sum(bounds) != level + q:
        raise ValueError(f"bounds must sum to level + q = {level + q}")
    return bounds


def good_colouring(t: ConstructionTrace, bounds: Sequence[int]) -> EdgeColouring:
    """An ``(N, k_1..k_q)``-good colouring of F_level, built recursively.

    The join edges take the first colour ``j`` with ``k_j >= 2``; the blow-up
    copies all repeat the good colouring of the previous level with ``k_j``
    lowered by one.
    """
    bounds = _check_bounds(bounds, t.level, t.q)
    if t.level == 0:
        return EdgeColouring(t.graph, (), t.q)
    j = next(i for i, k in enumerate(bounds) if k >= 2)
    lowered = bounds[:j] + (bounds[j] - 1,) + bounds[j + 1:]
    inner_col = good_colouring(t.prev, lowered)
    a = len(t.a_set)
    mapping = replicate_colouring(t.inner, inner_col, shift=a)
    for x in t.a_set:
        for y in t.b_set:
            mapping[(x, y)] = j + 1
    return EdgeColouring.from_mapping(t.graph, mapping, t.q)


# ------------------------------------------------------------------ focus

@dataclass(frozen=True)
class FocusResult:
    a_prime: tuple[int, ...]
    b_prime: tuple[int, ...]
    colour: int


def focus(a_set: Sequence[int], b_set: Sequence[int], c: EdgeColouring) -> FocusResult:
    """Pigeonhole out a monochromatic complete bipartite piece of A x B.

    B-vertices are grouped by their colour pattern towards A; the most
    frequent pattern (ties: lexicographically least) gives B', and the
    largest colour class inside that pattern (ties: least colour) gives A'.
    Guarantees |A'| >= |A|/q and |B'| >= |B|/q**|A|.
    """
    a_sorted = sorted(a_set)
    b_sorted = sorted(b_set)
    groups: dict[tuple[int, ...], list[int]] = {}
    for b in b_sorted:
        pattern = []
        for a in a_sorted:
            if not c.graph.has_edge(a, b):
                raise ValueError(f"pair {(a, b)} is not an edge")
            pattern.append(c.colour(a, b))
        groups.setdefault(tuple(pattern), []).append(b)
    if not groups:
        raise ValueError("B must be non-empty")
    pattern = min(groups, key=lambda p: (-len(groups[p]), p))
    counts = Counter(pattern)
    colour = min(counts, key=lambda x: (-counts[x], x))
    a_prime = tuple(a for a, x in zip(a_sorted, pattern) if x == colour)
    return FocusResult(a_prime, tuple(groups[pattern]), colour)


# ------------------------------------------------------------- extraction

@dataclass(frozen=True)
class RamseyWitness:
    """For colour ``j`` (1-based), ``classes[j-1]`` holds ``m_values[j-1]``
    disjoint M-sets spanning a monochromatic K_{m_j}(M)."""

    m_values: tuple[int, ...]
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    def to_dict(self) -> dict:
        return {
            "m_values": list(self.m_values),
            "classes": [[list(s) for s in cls] for cls in self.classes],
        }


def verify_witness(w: RamseyWitness, c: EdgeColouring, m: int, total: int | None = None) -> bool:
    if len(w.m_values) != c.q or len(w.classes) != c.q:
        return False
    if total is not None and sum(w.m_values) != total:
        return False
    for j, parts in enumerate(w.classes, start=1):
        if len(parts) != w.m_values[j - 1] or w.m_values[j - 1] < 1:
            return False
        seen: set[int] = set()
        for s in parts:
            if len(s) != m or len(set(s)) != m or seen & set(s):
                return False
            seen |= set(s)
        for s, t in combinations(parts, 2):
            for x in s:
                for y in t:
                    if not c.graph.has_edge(x, y) or c.colour(x, y) != j:
                        return False
    return True


def extract_witness(t: ConstructionTrace, c: EdgeColouring) -> RamseyWitness:
    """Follow the inductive argument down the trace to monochromatic K_{m_j}(M)'s.

    At each level: focus on (A, B), keep the ``M`` smallest vertices of A',
    find the first backing hyperedge inside B', descend into the copy of the
    previous level embedded there, and add A' as a new part in the focus
    colour.  The returned witness has ``sum(m_j) = level + q``.
    """
    if c.graph != t.graph:
        raise ValueError("colouring is for a different graph")
    w = _extract(t, c, list(range(t.graph.n)))
    if not verify_witness(w, c, t.m, t.level + t.q):
        raise AssertionError("extracted witness failed verification")
    return w


def _extract(t: ConstructionTrace, c: EdgeColouring, phi: list[int]) -> RamseyWitness:
    if t.level == 0:
        base = tuple(sorted(phi))
        return RamseyWitness((1,) * t.q, tuple((base,) for _ in range(t.q)))
    a = len(t.a_set)
    fr = focus([phi[x] for x in t.a_set], [phi[y] for y in t.b_set], c)
    if len(fr.a_prime) < t.m:
        raise AssertionError("focussing returned fewer than M vertices of A")
    a_part = tuple(sorted(fr.a_prime)[: t.m])
    inside = set(fr.b_prime)
    for e, emb in zip(t.inner.backing.hyperedges, t.inner.embeddings):
        if all(phi[a + v] in inside for v in e):
            sub_phi = [phi[a + v] for v in emb.image]
            break
    else:
        raise ExtractionFailure(
            f"level {t.level}: no backing hyperedge inside the focussed set of size "
            f"{len(fr.b_prime)} (eps={t.eps} too weak for this colouring)"
        )
    w = _extract(t.prev, c, sub_phi)
    j = fr.colour - 1
    m_values = list(w.m_values)
    m_values[j] += 1
    classes = list(w.classes)
    classes[j] = classes[j] + (a_part,)
    return RamseyWitness(tuple(m_values), tuple(classes))


# --------------------------------------------------- a-parameter construction

@dataclass(frozen=True)
class Theorem8Build:
    """F = join of ``q * a(g)`` independent vertices onto L(F_{q(chi-2)}, eps_l, N)."""

    g: Graph
    q: int
    n_cap: int
    chi: int
    a_value: int
    inner: ConstructionTrace
    blowup: BlowupTrace
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    graph: Graph

    def check(self) -> None:
        if self.inner.level != self.q * (self.chi - 2):
            raise ValueError("inner tower level must be q(chi-2)")
        if len(self.a_set) != self.q * self.a_value:
            raise ValueError("|A| must be q*a(g)")
        if self.blowup.base != self.inner.graph:
            raise ValueError("blow-up base must be the inner tower graph")
        if self.graph != complete_join(len(self.a_set), self.blowup.result):
            raise ValueError("graph is not the join of A onto the blow-up")
        self.inner.check()
        self.blowup.check()

    def to_dict(self) -> dict:
        return {
            "g": graph_to_dict(self.g),
            "q": self.q,
            "n_cap": self.n_cap,
            "chi": self.chi,
            "a_value": self.a_value,
            "inner": self.inner.to_dict(),
            "blowup": self.blowup.to_dict(),
            "a_set": list(self.a_set),
            "b_set": list(self.b_set),
            "graph": graph_to_dict(self.graph),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Theorem8Build":
        try:
            b = cls(
                g=graph_from_dict(d["g"]),
                q=int(d["q"]),
                n_cap=int(d["n_cap"]),
                chi=int(d["chi"]),
                a_value=int(d["a_value"]),
                inner=ConstructionTrace.from_dict(d["inner"]),
                blowup=BlowupTrace.from_dict(d["blowup"]),
                a_set=tuple(d["a_set"]),
                b_set=tuple(d["b_set"]),
                graph=graph_from_dict(d["graph"]),
            )
            b.check()
        except FormatError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad theorem-8 build: {exc}") from exc
        return b


def build_theorem8(
    g: Graph,
    h_size: int,
    q: int = 2,
    eps_override=None,
    size_budget: int | None = None,
    *,
    seed: int | None = 0,
    search_budget: int = 200,
    max_vertices: int = 40,
) -> Theorem8Build:
    """The graph that arrows ``g`` but not any H on ``h_size`` vertices with a(H) > a(g).

    Default epsilons are ``q**(-q M)`` for the tower and ``q**(-q a(g))`` for
    the final blow-up; ``eps_override`` replaces both.
    """
    chi, _ = chromatic_number(g)
    if chi < 2:
        raise ValueError("g must have chromatic number at least 2")
    a_value, _ = a_parameter(g)
    m = g.n
    level = q * (chi - 2)
    tower = build_f_tower(
        m, h_size, q, level, eps_override, size_budget,
        seed=seed, search_budget=search_budget, max_vertices=max_vertices,
    )
    top = tower[-1]
    eps_l = as_fraction(eps_override) if eps_override is not None else Fraction(1, q ** (q * a_value))
    bt = build_l(
        top.graph, eps_l, h_size,
        rng=np.random.default_rng([seed or 0, 8]),
        search_budget=search_budget, max_vertices=max_vertices,
    )
    a = q * a_value
    if size_budget is not None and a + bt.result.n > size_budget:
        raise SizeBudgetExceeded(
            f"F would have {a + bt.result.n} vertices (budget {size_budget})", stage=level + 1
        )
    return Theorem8Build(
        g=g, q=q, n_cap=h_size, chi=chi, a_value=a_value, inner=top, blowup=bt,
        a_set=tuple(range(a)), b_set=tuple(range(a, a + bt.result.n)),
        graph=complete_join(a, bt.result),
    )


def theorem8_colouring(
    build: Theorem8Build, a_of_g: int | None = None, q: int | None = None
) -> EdgeColouring:
    """Split A into q blocks S_1..S_q of a(g) vertices; edges at S_i get colour i.

    The blow-up is coloured by replicating an (N, chi-1, ..., chi-1)-good
    colouring of the inner tower graph.
    """
    a_of_g = build.a_value if a_of_g is None else a_of_g
    q = build.q if q is None else q
    if q != build.q or len(build.a_set) != q * a_of_g:
        raise ValueError("|A| must equal q * a(g)")
    inner_col = good_colouring(build.inner, (build.chi - 1,) * q)
    a = len(build.a_set)
    mapping = replicate_colouring(build.blowup, inner_col, shift=a)
    for x in build.a_set:
        for y in build.b_set:
            mapping[(x, y)] = x // a_of_g + 1
    return EdgeColouring.from_mapping(build.graph, mapping, q)


def interior_colouring(build: Theorem8Build, c: EdgeColouring) -> EdgeColouring:
    """Restriction of a colouring of F to the blow-up, relabelled to the blow-up's vertices."""
    a = len(build.a_set)
    mapping = {(u, v): c.colour(u + a, v + a) for u, v in build.blowup.result.edges}
    return EdgeColouring.from_mapping(build.blowup.result, mapping, c.q)

