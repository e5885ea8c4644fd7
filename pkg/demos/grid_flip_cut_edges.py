"""
Flip cut edges of a grid
========================

Forbidding a single edge can split the flip graph of a point set.  On a
grid, the interior unit edges do that, the boundary ones do not.
"""

from flipcut import all_flip_cut_edges, analyze_edge, gen_grid
from flipcut.render import render_svg

# a 3x3 grid; point (x, y) has index y*3 + x
G = gen_grid(3, 3)

# the edge from (0,1) to (1,1) is interior
rep = analyze_edge(G, (3, 4))
print("edge (0,1)-(1,1):", rep.flip_cut, rep.component_count, "components")
for A, B in rep.components.components:
    print("   apexes above", A, "below", B)

# the edge from (0,0) to (1,0) is on the boundary: nothing crosses it
print("edge (0,0)-(1,0):", analyze_edge(G, (0, 1)).flip_cut)

# every flip cut edge of a 5x5 grid, drawn in red
G5 = gen_grid(5, 5)
cut = all_flip_cut_edges(G5)
print(len(cut), "flip cut edges on the 5x5 grid")
with open("grid5_flip_cut.svg", "w") as fh:
    fh.write(render_svg(G5, highlight=cut))
print("wrote grid5_flip_cut.svg")
