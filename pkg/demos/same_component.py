"""
Are two triangulations still connected?
=======================================

Once the components of the crossing edges are known, deciding whether
two triangulations avoiding e stay connected only needs one edge of each
triangulation that crosses e.
"""

from flipcut import gen_hourglass, same_component
from flipcut.triangulation import constrained_triangulation

F = gen_hourglass(3)
P = F.points
uv = (F.names["u"], F.names["v"])
a, b = F.names["a"], F.names["b"]

# one triangulation through each long diagonal a_i b_i
Ts = [constrained_triangulation(P, [(a[i], b[i])]) for i in range(3)]
for i in range(3):
    print([same_component(P, uv, Ts[i], Ts[j]) for j in range(3)])
