"""
Arrowing with certificates
==========================

K_6 forces a monochromatic triangle in every 2-colouring, but not a
triangle plus a disjoint edge.  K_5 already fails for the triangle.
"""

from ramsey_workbench.arrowing import (
    EdgeColouring,
    PProfile,
    arrows,
    colour_class,
    find_monochromatic_copy,
    find_separator,
    verify_p_profile,
)
from ramsey_workbench.formats import to_graph6
from ramsey_workbench.graph_core import complete_graph, disjoint_union

k3 = complete_graph(3)
k3_k2 = disjoint_union(k3, complete_graph(2))

r = arrows(complete_graph(6), k3)
print("K_6 -> K_3:", r.arrows, f"({r.nodes} search nodes)")

r = arrows(complete_graph(6), k3_k2)
print("K_6 -> K_3+K_2:", r.arrows)
print("  certificate:", r.certificate.to_dict()["colours"])
print("  re-check finds a copy:", find_monochromatic_copy(r.certificate, k3_k2))

# the classical pentagon / pentagram split of K_5
r = arrows(complete_graph(5), k3)
for i in (1, 2):
    print(f"K_5 colour {i}:", colour_class(r.certificate, i).edges)

# P-profiles: a colouring is (N, k_1, k_2)-good when every small colour-i piece is k_i-colourable
red_triangle = EdgeColouring.constant(k3, 2)
print("all-red K_3 (3, 2, 1)-good?", verify_p_profile(red_triangle, PProfile(3, (2, 1))))

# a small separator search; an empty answer would prove nothing
print("graphs on <= 6 vertices arrowing K_3 but not K_4:")
for f in find_separator(k3, complete_graph(4), 2, 6):
    print("  ", to_graph6(f), f"n={f.n} m={f.num_edges}")
