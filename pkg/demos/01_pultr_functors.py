"""
Pultr functors on small graphs
==============================

Build the path templates, push a few graphs through the central and
left functors, and look at what comes out.
"""

from thinhom import (
    chromatic_number, circular_chromatic_number, gamma_functor, hom_equivalent, lambda_functor,
    make_circular_complete, make_complete, make_cycle, odd_girth, shift_graph, template_arc, template_path,
)

# the path template with 3 vertices: arcs of Gamma are walks of length 3
T3 = template_path(3)
img = gamma_functor(T3, make_cycle(5))
print("Gamma_T3(C5):", img.n, "vertices,", img.num_arcs, "arcs")
print("  equivalent to K5:", hom_equivalent(img, make_complete(5)))

# Lambda subdivides every edge twice, so odd cycles stretch
L = lambda_functor(T3, make_cycle(3))
print("Lambda_T3(C3):", L.n, "vertices, odd girth", odd_girth(L))

# circular cliques are sent to circular cliques
for p, q in [(5, 2), (7, 3), (9, 4)]:
    G = make_circular_complete(p, q)
    print(f"chi_c(Gamma_T3(K{p}/{q})) =", circular_chromatic_number(gamma_functor(T3, G)))

# the arc template gives the arc graph; iterating on transitive tournaments
# gives shift graphs
for n in range(3, 9):
    S = shift_graph(n, 2)
    print(f"S({n},2): {S.n} vertices, chi {chromatic_number(S)}")
print("arc template:", template_arc())
