# Type-II homomorphisms, lifts and bounds
# =======================================
#
# A type-II homomorphism G -> H pulls fall colorings of H back to fall
# colorings of G.  The two-case map KG(n+2, m+1) -> KG(n, m) (drop the largest
# element, or swap {n+1, n+2} for the largest missing element) preserves
# edges, but the verifier finds a vertex violating the second condition.

from fallkolor import fall_bounds, hilton_milner, thm1_map, verify_type2_hom
from fallkolor.bounds import closed_form_spectrum, degree_upper_bound
from fallkolor.coloring import Coloring, VertexMap, is_fall, pullback_coloring
from fallkolor.graph import cycle_graph, complete_graph

for n, m in [(5, 2), (7, 2), (7, 3)]:
    h = thm1_map(n, m, check=False)
    verdict = verify_type2_hom(h)
    if verdict:
        print(f"{h.source.name} -> {h.target.name}: type-II")
    else:
        _, (t1, t2), v = verdict.witness
        print(f"{h.source.name} -> {h.target.name}: not type-II; {h.source.labels[v]} maps to "
              f"{h.target.labels[t2]} but has no neighbor over {h.target.labels[t1]}")

# A map that does work: wrapping C6 twice around K3
h = VertexMap(cycle_graph(6), complete_graph(3), (0, 1, 2, 0, 1, 2))
pulled = pullback_coloring(h, Coloring.from_assignment([1, 2, 3]))
print("C6 -> K3 type-II:", bool(verify_type2_hom(h)), " pulled-back coloring fall:", bool(is_fall(h.source, pulled)))

# Bounds on the fall spectrum for n >= 2m
print(f"{'n':>3} {'m':>2} {'h':>3} {'lower':>6} {'upper':>6} {'deg+1':>6}  known")
for n, m in [(4, 2), (7, 2), (9, 2), (12, 2), (13, 2), (15, 2), (9, 3), (10, 3)]:
    lower, upper = fall_bounds(n, m)
    known = closed_form_spectrum(n, m).spectrum
    print(f"{n:>3} {m:>2} {hilton_milner(n, m):>3} {lower:>6} {upper:>6} {degree_upper_bound(n, m):>6}  "
          f"{sorted(known) if known is not None else 'open'}")
# From n = 13 the known spectrum of KG(n, 2) lies above the upper value;
# the degree bound C(n-m, m) + 1 still holds.
