# Fall colorings of KG(n, 2)
# ==========================
#
# A fall k-coloring is a proper coloring in which every vertex sees all k
# colors in its closed neighborhood.  In KG(n, 2) every color class of a fall
# coloring is either a triangle {ab, bc, ca} or a complete star {ax : x != a},
# so fall colorings come from triangle decompositions of K_n (optionally with
# one star).

from fallkolor import closed_form_spectrum, coloring_from_design, construct_sts, is_fall, star_triangle_coloring
from fallkolor.coloring import intersecting_classes
from fallkolor.graph import iter_bits

# n = 1, 3 (mod 6): every class is a triangle of an STS(n)
r = coloring_from_design(9, 2, construct_sts(9))
print(f"{r.graph.name}: fall {r.k}-coloring, verified = {bool(is_fall(r.graph, r.coloring))}")
for row in r.coloring.classes[:4]:
    print("   class", [str(r.graph.labels[v]) for v in iter_bits(row)])

# n = 2, 4 (mod 6): one star at n plus an STS(n - 1) on the rest
r = star_triangle_coloring(10)
print(f"{r.graph.name}: fall {r.k}-coloring, verified = {bool(is_fall(r.graph, r.coloring))}")
for color, common in intersecting_classes(r.graph, r.coloring):
    print(f"   class {color} is the star at {set(common)}:",
          [str(r.graph.labels[v]) for v in iter_bits(r.coloring.classes[color - 1])])

# Closed-form spectrum for small n
for n in range(2, 17):
    print(f"Fall(KG({n},2)) =", sorted(closed_form_spectrum(n, 2).spectrum))
