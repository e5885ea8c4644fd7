"""
Testing one edge in a large point set
=====================================

The single edge test sorts the points around both endpoints and then
runs linear sweeps, so doubling n roughly doubles the time.
"""

import time

import numpy as np

from flipcut import gen_random, is_flip_cut_edge

for n in (12_500, 25_000, 50_000, 100_000):
    P = gen_random(n, 2**20, 1)
    d = ((P.xy - P.xy[0]) ** 2).sum(axis=1)
    d[0] = d.max() + 1
    e = (0, int(np.argmin(d)))
    t = time.perf_counter()
    res = is_flip_cut_edge(P, e)
    print(f"n={n:>7}: {res}  {time.perf_counter() - t:.3f} s")
