"""
Products and chromatic numbers
==============================
"""

import numpy as np

from thinhom import (
    cartesian_product, chromatic_number, direct_product, lexicographic_product, make_complete,
    make_cycle, make_kneser,
)

# adjacency of the direct product is the Kronecker product
C5, K3 = make_cycle(5), make_complete(3)
P = direct_product(C5, K3)
print("direct product matches kron:", np.array_equal(P.adjacency(), np.kron(C5.adjacency(), K3.adjacency())))

for G, H in [(C5, K3), (make_cycle(7), make_complete(2)), (make_complete(3), make_complete(4))]:
    print(f"chi {chromatic_number(G)} x {chromatic_number(H)}:",
          "direct", chromatic_number(direct_product(G, H)),
          "box", chromatic_number(cartesian_product(G, H)),
          "lex", chromatic_number(lexicographic_product(G, H)))

# Kneser graphs: chi(K(n, m)) = n - 2m + 2
for n, m in [(5, 2), (6, 2), (7, 3)]:
    print(f"chi(Kneser({n},{m})) =", chromatic_number(make_kneser(n, m)))
