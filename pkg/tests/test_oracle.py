from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import point_sets
from flipcut.convex import zigzag_cut_set
from flipcut.core import is_flip_cut_edge, z_edges
from flipcut.generators import gen_channel, gen_convex, gen_grid, gen_hourglass
from flipcut.geometry import crossing_edges, make_edge, valid_edges
from flipcut.oracle import (
    bf_flip_graph,
    bf_is_flip_cut,
    bf_line_graph_components,
    ec5_criterion,
    ec5_diagonal,
    grid_z_oracle,
    lattice_line,
)


def test_pentagon_flip_graph_is_a_cycle():
    g = bf_flip_graph(gen_convex(5))
    assert len(g.nodes) == 5 and len(g.adjacency) == 5
    assert all(len(nb) == 2 for nb in g.neighbors)


def test_hourglass_two_components():
    F = gen_hourglass(2)
    res = bf_is_flip_cut(F.points, [(F.names["u"], F.names["v"])])
    assert res.flip_cut and res.component_count == 2


def test_quad_with_both_diagonals_forbidden_is_empty():
    g = bf_flip_graph(gen_convex(4), [(0, 2), (1, 3)])
    assert g.nodes == [] and g.components() == []
    assert not bf_is_flip_cut(gen_convex(4), [(0, 2), (1, 3)]).flip_cut


def test_hourglass_three():
    F = gen_hourglass(3)
    res = bf_is_flip_cut(F.points, [(F.names["u"], F.names["v"])])
    assert res.flip_cut and res.component_count == 3
    js = res.to_json([(F.names["u"], F.names["v"])])
    assert js["oracle"] is True and js["component_count"] == 3


def test_convex_six_zigzag_and_single_chords():
    C = gen_convex(6)
    _, X, _ = zigzag_cut_set(6)
    assert bf_is_flip_cut(C, X).flip_cut
    for c in [(0, 2), (0, 3), (1, 4), (2, 5)]:
        assert not bf_is_flip_cut(C, [c]).flip_cut


def test_line_graph_components():
    G = gen_grid(3, 3)
    assert len(bf_line_graph_components(G, (3, 4), "Z")) == 2
    F = gen_hourglass(4)
    comps = bf_line_graph_components(F.points, (F.names["u"], F.names["v"]), "Y")
    assert sorted(map(sorted, comps)) == sorted([[make_edge(a, b)] for a, b in zip(F.names["a"], F.names["b"])])
    with pytest.raises(ValueError):
        bf_line_graph_components(G, (3, 4), "W")


@settings(max_examples=30)
@given(point_sets(min_size=4, max_size=7))
def test_line_graph_matches_flip_graph(P):
    for e in valid_edges(P):
        Y = crossing_edges(P, e)
        res = bf_is_flip_cut(P, [e])
        if not Y:
            continue
        gy = bf_line_graph_components(P, e, "Y")
        gz = bf_line_graph_components(P, e, "Z")
        assert len(gy) == res.component_count == len(gz)
        assert all(c & z_edges(P, e) for c in gy)
        if not res.flip_cut:
            assert len(gy) == 1


@settings(max_examples=30)
@given(point_sets(min_size=4, max_size=7))
def test_union_decomposition_and_constrained_connectivity(P):
    full = bf_flip_graph(P)
    for e in valid_edges(P):
        Y = crossing_edges(P, e)
        avoid = {T for T in full.nodes if e not in T}
        union = {T for T in full.nodes if any(f in T for f in Y)}
        assert avoid == union
        for f in Y:
            sub = bf_flip_graph(P, [h for h in valid_edges(P) if h != f and h in crossing_edges(P, f)])
            plus = [T for T in sub.nodes if f in T]
            assert len(plus) == len(sub.nodes)
            assert len(sub.components()) == 1


def test_ec5_criterion():
    G = gen_grid(4, 4)
    for e in valid_edges(G):
        v = ec5_criterion(G, e)
        assert v.applicable
        assert v.flip_cut == is_flip_cut_edge(G, e)[0]
    F = gen_channel(5)
    b2, t3 = F.names["b"][1], F.names["t"][2]
    v = ec5_criterion(F.points, (b2, t3))
    assert v.applicable and v.flip_cut
    C = gen_convex(5)
    assert ec5_diagonal(C, (0, 2)) is not None
    assert not ec5_criterion(C, (0, 2)).applicable


@settings(max_examples=30)
@given(point_sets(min_size=4, max_size=7))
def test_ec5_criterion_agrees_with_oracle(P):
    for e in valid_edges(P):
        v = ec5_criterion(P, e)
        if v.applicable:
            assert v.flip_cut == is_flip_cut_edge(P, e)[0] == bf_is_flip_cut(P, [e]).flip_cut


def test_grid_oracle():
    assert grid_z_oracle(3, 3, (3, 4)) == {(1, 6), (0, 7)}
    for k in (5, 7):
        G = gen_grid(k, k)
        for e in valid_edges(G):
            assert grid_z_oracle(k, k, e) == z_edges(G, e)


def test_grid_boundary_adjacent_long_diagonals():
    G = gen_grid(7, 7)
    seen = 0
    for e in valid_edges(G):
        Z = grid_z_oracle(7, 7, e)
        if len(Z) <= 1:
            assert not is_flip_cut_edge(G, e)[0]
            seen += 1
    assert seen > 0


def test_lattice_line():
    pts = lattice_line(3, 3, (0, 1), (1, 0), 1)
    assert pts == [(0, 2), (1, 2), (2, 2)]
