"""
Right adjoints
==============

The right adjoints are explicit constructions. A hom G -> Omega(H) exists
exactly when Gamma(G) -> H does; here we spot-check that and the
familiar identities.
"""

from thinhom import (
    chromatic_number, gamma_functor, hom_equivalent, hom_exists, make_circular_complete,
    make_complete, make_cycle, omega2, omega3, omega_odd, template_box2, template_path,
)

K3, K4 = make_complete(3), make_complete(4)

print("Omega_3(K3) ~ C9:", hom_equivalent(omega3(K3), make_cycle(9)))
print("Omega_5(K3) ~ C15:", hom_equivalent(omega_odd(2, K3), make_cycle(15)))
print("chi(Omega_3(K4)) =", chromatic_number(omega3(K4)))

T3 = template_path(3)
for G in (make_cycle(5), make_cycle(7), K4):
    for H in (K3, K4):
        left = hom_exists(gamma_functor(T3, G), H) is not None
        right = hom_exists(G, omega3(H)) is not None
        print(f"  G={G.n:2d} H={H.n}: Gamma(G)->H {left!s:5} G->Omega(H) {right}")

# Omega_2 is only a partial adjoint
O = omega2(K4)
img = gamma_functor(template_box2(), O)
print("Omega_2(K3) ~ K12/5:", hom_equivalent(omega2(K3), make_circular_complete(12, 5)))
print("K6 -> Gamma(Omega_2(K4)):", hom_exists(make_complete(6), img) is not None)
print("Gamma(Omega_2(K4)) -> K4:", hom_exists(img, K4) is not None)
