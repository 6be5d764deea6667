# Exhaustive fall spectra
# =======================
#
# Each color class of a fall coloring is a maximal independent set, so a
# fall k-coloring is an exact cover of the vertices by k maximal independent
# sets.  The solver enumerates the maximal independent sets, then searches for
# covers, branching on the least uncovered vertex.

from fallkolor import closed_form_spectrum, enumerate_mis, fall_spectrum, kneser
from fallkolor.graph import Graph, cycle_graph
from fallkolor.solver import k_window

for n in range(2, 10):
    g = kneser(n, 2)
    r = fall_spectrum(g)
    expected = sorted(closed_form_spectrum(n, 2).spectrum)
    print(f"{g.name}: searched k in [{r.k_min}, {r.k_max}], spectrum {list(r.spectrum)}, "
          f"closed form {expected}, {sum(r.nodes.values())} nodes")

# Graphs with no fall coloring at all
for g in (cycle_graph(5), Graph.from_edges(3, [(0, 1)], name="K2+K1")):
    print(g.name, "spectrum:", list(fall_spectrum(g).spectrum))

# The search window uses alpha (largest MIS), the smallest MIS and the minimum
# degree: a fall k-coloring needs k - 1 <= min degree.
g = kneser(7, 3)
cat = enumerate_mis(g)
print(f"{g.name}: {len(cat)} maximal independent sets, window {k_window(cat)}")
