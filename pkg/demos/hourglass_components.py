"""
Many components from one edge
=============================

Points a_1..a_n on a half circle, their antipodes b_1..b_n, and a short
edge uv at the centre.  Every a_i b_i crosses uv, and no two of these
crossing edges share an endpoint, so forbidding uv leaves n separate
pieces of the flip graph.
"""

from flipcut import bf_is_flip_cut, gen_hourglass, is_flip_cut_edge

for n in range(2, 9):
    F = gen_hourglass(n)
    uv = (F.names["u"], F.names["v"])
    print(n, "points per side ->", is_flip_cut_edge(F.points, uv)[1], "components")

# the brute-force flip graph agrees on the small cases
for n in (2, 3):
    F = gen_hourglass(n)
    res = bf_is_flip_cut(F.points, [(F.names["u"], F.names["v"])])
    print(f"oracle, n={n}: {res.component_count} components among {res.node_count} triangulations")
