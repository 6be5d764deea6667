# Kneser graphs and Steiner triple systems
# ========================================
#
# KG(n, m) has the m-subsets of {1..n} as vertices, two of them adjacent when
# they are disjoint.  Vertices are numbered in colex order, so vertex i is
# always colex_unrank(i, n, m).

from fallkolor import colex_rank, colex_unrank, construct_sts, kneser, verify_design
from fallkolor.graph import iter_bits

petersen = kneser(5, 2)
print(petersen.name, petersen.vertex_count, "vertices,", petersen.edge_count, "edges")
print("labels in colex order:", [str(lab) for lab in petersen.labels])

# Neighbors of {1,2} are the pairs inside {3,4,5}
v = colex_rank((1, 2))
print("N({1,2}) =", [str(petersen.labels[u]) for u in iter_bits(petersen.neighbors(v))])
print("rank of {4,5}:", colex_rank((4, 5)), " unrank 7:", colex_unrank(7, 5, 2))

# KG(n, 1) is complete, KG(2m, m) is a perfect matching, KG(n, m) with 2m > n is edgeless
for n, m in [(5, 1), (6, 3), (5, 3)]:
    g = kneser(n, m)
    print(f"{g.name}: {g.vertex_count} vertices, {g.edge_count} edges")

# Steiner triple systems exist exactly for v = 1, 3 (mod 6).  The Bose
# construction handles v = 3 (mod 6), Skolem's handles v = 1 (mod 6).
for v in (7, 9, 13, 15):
    d = construct_sts(v)
    print(f"STS({v}): {d.b} triples, verified = {bool(verify_design(d))}")
print("STS(7) triples:", [str(b) for b in construct_sts(7).blocks])
