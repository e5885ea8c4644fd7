"""
Convex position: no single cut edge, but a cut set of size n - 3
================================================================

Points in convex position have no flip cut edge at all.  Forbidding the
n - 3 flip partners of a zigzag triangulation freezes it, while a second
zigzag survives, so that set disconnects the flip graph.  With one chord
fewer, any two surviving triangulations can still be joined.
"""

import itertools

from flipcut import all_flip_cut_edges, bf_is_flip_cut, connect_avoiding, gen_convex, zigzag_cut_set
from flipcut.convex import all_chords, check_path, chords_of
from flipcut.triangulation import enumerate_triangulations

for n in range(4, 11):
    print(n, "points, flip cut edges:", sorted(all_flip_cut_edges(gen_convex(n))))

T, X, T2 = zigzag_cut_set(7)
print("zigzag T  :", sorted(chords_of(T)))
print("forbidden :", sorted(X))
print("other T2  :", sorted(chords_of(T2)))
print("oracle says disconnected:", bf_is_flip_cut(gen_convex(7), X).flip_cut)

# a pentagon is too small for the construction: nothing cuts its 5-cycle
C5 = gen_convex(5)
chords = all_chords(range(5))
print("pentagon cut sets:", [X for r in range(6) for X in itertools.combinations(chords, r)
                            if bf_is_flip_cut(C5, X).flip_cut])

# n - 4 forbidden chords: walk between two triangulations avoiding them
n = 8
X = all_chords(range(n))[:n - 4]
Ts = [T for T in enumerate_triangulations(gen_convex(n)) if not (T.edge_set & set(X))]
path = connect_avoiding(n, X, Ts[0], Ts[-1])
check_path(path, X)
print(f"joined two of {len(Ts)} triangulations in {len(path)} flips avoiding {X}")
