"""
Checking the fast test against brute force
==========================================

For small point sets the whole flip graph can be built.  Here the fast
edge test and the exhaustive search are compared on random sets,
collinear points included.
"""

from flipcut import bf_is_flip_cut, gen_random, is_flip_cut_edge, valid_edges

edges = agree = cuts = 0
for seed in range(40):
    P = gen_random(5 + seed % 4, 15, seed)
    for e in valid_edges(P):
        fast = is_flip_cut_edge(P, e)[0]
        slow = bf_is_flip_cut(P, [e]).flip_cut
        edges += 1
        agree += fast == slow
        cuts += fast
print(f"{agree}/{edges} edges agree, {cuts} flip cut edges found")
