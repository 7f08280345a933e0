"""
Two 4-chromatic digraphs with a 3-chromatic product
===================================================

Search tournaments on four vertices for a pair whose direct product needs
fewer colours than either factor.
"""

from thinhom import chromatic_number, direct_product, format_graph
from thinhom.harness import suite_poljak_rodl

for n in (2, 3):
    rec = suite_poljak_rodl(n)
    print(f"n={n}: found={rec.found} after {rec.pairs_searched} pairs")

rec = suite_poljak_rodl(3)
print(format_graph(rec.G))
print(format_graph(rec.H))
print("chi:", chromatic_number(rec.G), chromatic_number(rec.H),
      "product", chromatic_number(direct_product(rec.G, rec.H)))
print("recheck from text:", rec.revalidate())
