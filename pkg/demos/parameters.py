"""
Graph parameters that tell Ramsey classes apart
===============================================

Chromatic number, clique number, odd girth and the colour-1 minimum a(G)
on a few small graphs.
"""

from ramsey_workbench.graph_core import complete_bipartite, complete_multipartite, cycle_graph, petersen_graph
from ramsey_workbench.invariants import a_parameter, chromatic_number, clique_number, odd_girth

graphs = {
    "C_5": cycle_graph(5),
    "K_3(2)": complete_multipartite(3, 2),
    "K_{3,3}": complete_bipartite(3, 3),
    "Petersen": petersen_graph(),
}

for name, g in graphs.items():
    chi, colouring = chromatic_number(g)
    a, witness = a_parameter(g)
    print(f"{name:9s} chi={chi} omega={clique_number(g)} odd girth={odd_girth(g)} a={a}")
    # the witness puts exactly a vertices in colour 1
    print(f"          colour-1 class {witness.class_of(1)}")

# K_3 and K_3(2) share chi and omega, but a separates them
print("a(K_3) =", a_parameter(complete_multipartite(3, 1))[0], " a(K_3(2)) =", a_parameter(graphs["K_3(2)"])[0])
