"""
Blow-ups, towers and witness extraction
=======================================

Builds L(G, eps, N) over a searched hypergraph, checks the dense-subset
property exhaustively, then assembles F_1 at the true epsilon 1/16 and
pulls monochromatic K_m(M) witnesses out of random colourings.
"""

import numpy as np

from ramsey_workbench.arrowing import PProfile, random_colouring, verify_p_profile
from ramsey_workbench.constructions import (
    ExtractionFailure,
    build_f_tower,
    build_l,
    extract_witness,
    good_colouring,
    lemma5_check,
    min_dense_size,
    verify_lemma3,
)
from ramsey_workbench.graph_core import complete_graph
from ramsey_workbench.invariants import hypergraph_girth, hypergraph_independence_number

bt = build_l(complete_graph(3), "2/3", 3, seed=3, max_vertices=14)
h = bt.backing
print(f"backing: n={h.n}, {len(h.hyperedges)} triples, girth {hypergraph_girth(h)}, "
      f"independence {hypergraph_independence_number(h)}")
print(f"L has {bt.result.n} vertices and {bt.result.num_edges} edges")
print(f"every {min_dense_size(bt.eps, bt.result.n)}-subset holds a triangle:", lemma5_check(bt)[0])
print("short cycles stay inside one hyperedge:", verify_lemma3(bt, 3)[0])

# M=2, q=2: eps = 1/16 needs a graph with girth > N and independence < n/16.
# With N=2 the complete graph K_17 qualifies, so F_1 = K_{4,17}.
f1 = build_f_tower(2, 2, 2, 1)[-1]
print(f"F_1: eps={f1.eps}, {f1.graph.n} vertices, {f1.graph.num_edges} edges")

rng = np.random.default_rng(0)
for _ in range(3):
    w = extract_witness(f1, random_colouring(f1.graph, 2, rng))
    print("  witness", w.m_values, w.classes)

for bounds in ((1, 2), (2, 1)):
    ok, _ = verify_p_profile(good_colouring(f1, bounds), PProfile(2, bounds))
    print(f"  good colouring for {bounds} verified:", ok)

# with a relaxed eps the same procedure can fail, and says so
weak = build_f_tower(2, 3, 2, 1, eps_override="1/2", seed=7)[-1]
failures = 0
for _ in range(200):
    try:
        extract_witness(weak, random_colouring(weak.graph, 2, rng))
    except ExtractionFailure:
        failures += 1
print(f"eps=1/2 tower: {failures}/200 colourings defeat extraction")
