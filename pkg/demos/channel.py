"""
The channel: two facing reflex chains
=====================================

Every edge joining interior points of the upper and lower chains is a
flip cut edge.
"""

from flipcut import all_flip_cut_edges, gen_channel, make_edge
from flipcut.render import render_svg

F = gen_channel(6)
P, t, b = F.points, F.names["t"], F.names["b"]
cut = all_flip_cut_edges(P)

for i in range(6):
    row = "".join("x" if make_edge(b[i], t[j]) in cut else "." for j in range(6))
    print(f"b{i + 1}", row)

with open("channel6.svg", "w") as fh:
    fh.write(render_svg(P, highlight=cut))
print("wrote channel6.svg")
