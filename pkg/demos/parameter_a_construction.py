"""
Separating K_3 from K_3(2) through the parameter a
==================================================

Both graphs have chi = 3, but a(K_3) = 1 < 2 = a(K_3(2)).  The construction
joins q*a(K_3) = 2 independent vertices onto a blow-up of F_2 and colours
the join by halves of A.  With eps overridden to 1 every backing is a single
hyperedge, which keeps the graph at 17 vertices.  That override gives up the
guarantee that the graph arrows K_3; the colouring side is still checked.
"""

from ramsey_workbench.arrowing import PProfile, find_monochromatic_copy, verify_p_profile
from ramsey_workbench.constructions import build_theorem8, interior_colouring, theorem8_colouring
from ramsey_workbench.graph_core import complete_graph, complete_multipartite

build = build_theorem8(complete_graph(3), 6, q=2, eps_override=1)
print(f"chi={build.chi} a={build.a_value} |A|={len(build.a_set)} "
      f"n={build.graph.n} edges={build.graph.num_edges}")

c = theorem8_colouring(build)
print("monochromatic K_3(2):", find_monochromatic_copy(c, complete_multipartite(3, 2)))
inner = interior_colouring(build, c)
print("interior (6, 2, 2)-good:", verify_p_profile(inner, PProfile(6, (2, 2)))[0])
