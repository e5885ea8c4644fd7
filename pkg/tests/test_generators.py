from itertools import combinations

import pytest

from flipcut.core import is_flip_cut_edge, z_edges
from flipcut.generators import (
    GenerationError,
    _has_collinear_triple,
    gen_channel,
    gen_convex,
    gen_grid,
    gen_hourglass,
    gen_random,
)
from flipcut.geometry import GeometryError, empty_convex_polygon, make_edge, orient, valid_edges
from flipcut.oracle import bf_is_flip_cut
from flipcut.triangulation import enumerate_triangulations, flips


def test_grid():
    assert list(gen_grid(2, 2)) == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert len(gen_grid(7, 7)) == 49
    assert is_flip_cut_edge(gen_grid(3, 3), (3, 4))[0]


@pytest.mark.parametrize("k,l", [(3, 3), (4, 3), (4, 4)])
def test_grid_has_no_ec5(k, l):
    G = gen_grid(k, l)
    assert not any(empty_convex_polygon(G, c, 5) for c in combinations(range(len(G)), 5))


def test_convex():
    assert len(enumerate_triangulations(gen_convex(6))) == 14
    Ts = enumerate_triangulations(gen_convex(4))
    assert len(Ts) == 2
    assert len(list(flips(Ts[0]))) == 1
    with pytest.raises(GeometryError):
        gen_convex(2)


@pytest.mark.parametrize("n", range(3, 9))
def test_channel_validates(n):
    F = gen_channel(n)
    assert len(F.points) == 2 * n
    P = F.points
    t, b = F.names["t"], F.names["b"]
    assert all(orient(P[x], P[y], P[z]) == 1 for x, y, z in zip(t, t[1:], t[2:]))


def test_channel_interior_edges_and_corner():
    F = gen_channel(5)
    P = F.points
    t, b = F.names["t"], F.names["b"]
    for i in range(1, 4):
        for j in range(1, 4):
            assert is_flip_cut_edge(P, (b[i], t[j]))[0]
    # b_1 t_1 is settled by the fast test, which must agree with the oracle
    e = (b[0], t[0])
    assert is_flip_cut_edge(P, e)[0] == bf_is_flip_cut(P, [e]).flip_cut


def test_channel_rejects_small():
    with pytest.raises(GeometryError):
        gen_channel(2)


@pytest.mark.parametrize("n", range(2, 11))
def test_hourglass_validation(n):
    F = gen_hourglass(n)
    u, v = F.names["u"], F.names["v"]
    assert len(F.points) == 2 * n + 2
    assert z_edges(F.points, (u, v)) == {make_edge(a, b) for a, b in zip(F.names["a"], F.names["b"])}


def test_hourglass_three():
    F = gen_hourglass(3)
    assert is_flip_cut_edge(F.points, (F.names["u"], F.names["v"])) == (True, 3)
    with pytest.raises(GeometryError):
        gen_hourglass(1)


def test_random():
    assert gen_random(7, 15, 42) == gen_random(7, 15, 42)
    assert gen_random(7, 15, 42) != gen_random(7, 15, 43)
    P = gen_random(3, 5, 1)
    assert len(P) == 3
    Q = gen_random(8, 10, 5, allow_collinear=False)
    assert not _has_collinear_triple(Q)
    with pytest.raises(GeometryError):
        gen_random(10, 5, 0)
    with pytest.raises(GenerationError):
        gen_random(12, 12, 0, allow_collinear=False, max_tries=1)


def test_random_with_collinear_triples_is_handled():
    hits = 0
    for seed in range(30):
        P = gen_random(7, 15, seed)
        if _has_collinear_triple(P):
            hits += 1
            for e in valid_edges(P):
                is_flip_cut_edge(P, e)
    assert hits > 0


def test_family_comment_lines():
    F = gen_hourglass(2)
    assert F.comment_lines() == ["a: 0 1", "b: 2 3", "u: 4", "v: 5"]
