import pytest
from hypothesis import given, settings, strategies as st

from conftest import point_sets
from flipcut.core import (
    CROSS,
    LEFT,
    RIGHT,
    all_flip_cut_edges,
    analyze_edge,
    apex_orders,
    crossing_side,
    is_flip_cut_edge,
    representative_z_edge,
    same_component,
    z_components,
    z_edges,
)
from flipcut.generators import gen_channel, gen_convex, gen_grid, gen_hourglass
from flipcut.geometry import PointSet, crossing_edges, make_edge, orient, valid_edges
from flipcut.oracle import bf_flip_graph, ec3_apexes, line_graph_components
from flipcut.triangulation import TriangulationError, constrained_triangulation, enumerate_triangulations

G3 = gen_grid(3, 3)


def g(x, y, k=3):
    return y * k + x


def test_z_edges_examples():
    assert z_edges(G3, (g(0, 1), g(1, 1))) == {make_edge(g(0, 2), g(1, 0)), make_edge(g(1, 2), g(0, 0))}
    C = gen_convex(5)
    assert z_edges(C, (0, 2)) == {(1, 3), (1, 4)}
    T = PointSet([(0, 0), (1, 0), (0, 1)])
    assert all(z_edges(T, e) == set() for e in valid_edges(T))


def test_apex_orders_grid():
    ap = apex_orders(G3, (g(0, 1), g(1, 1)))
    assert ap.A == (g(0, 2), g(1, 2), g(2, 2))
    assert ap.B == (g(2, 0), g(1, 0), g(0, 0))


def test_apex_orders_hull_edge_side_empty():
    ap = apex_orders(G3, (g(0, 0), g(1, 0)))
    assert ap.B == ()
    assert is_flip_cut_edge(G3, (g(0, 0), g(1, 0))) == (False, 0)


def test_components_grid():
    rep = analyze_edge(G3, (g(0, 1), g(1, 1)))
    assert rep.flip_cut and rep.component_count == 2
    assert set(rep.components.components) == {((g(0, 2),), (g(1, 0),)), ((g(1, 2),), (g(0, 0),))}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_components_hourglass(n):
    F = gen_hourglass(n)
    a, b = F.names["a"], F.names["b"]
    rep = analyze_edge(F.points, (F.names["u"], F.names["v"]))
    assert rep.component_count == n
    assert {(A[0], B[0]) for A, B in rep.components.components if len(A) == len(B) == 1} == \
        set(zip(a, b))


def test_crossing_side():
    P = PointSet([(0, 0), (4, 0), (1, 1), (2, -1), (-1, 2), (-1, -2), (5, 2), (5, -2),
                  (-1, 1), (1, -1), (3, 1), (5, -1)])
    assert crossing_side(P, 0, 1, 2, 3) == CROSS
    assert crossing_side(P, 0, 1, 4, 5) == LEFT
    assert crossing_side(P, 0, 1, 6, 7) == RIGHT
    # segments through u or v count as passing beside e
    assert crossing_side(P, 0, 1, 8, 9) == LEFT
    assert crossing_side(P, 0, 1, 10, 11) == RIGHT


def test_convex_has_no_flip_cut_edges():
    C = gen_convex(8)
    assert all(not is_flip_cut_edge(C, e)[0] for e in valid_edges(C))
    assert all_flip_cut_edges(gen_convex(10)) == set()


def test_all_edges_channel_and_grid():
    F = gen_channel(5)
    t, b = F.names["t"], F.names["b"]
    found = all_flip_cut_edges(F.points)
    assert {make_edge(b[i], t[j]) for i in range(1, 4) for j in range(1, 4)} <= found
    G9 = gen_grid(9, 9)
    mid = [g(x, y, 9) for x in range(3, 6) for y in range(3, 6)]
    found = all_flip_cut_edges(G9)
    assert {e for e in valid_edges(G9) if e[0] in mid and e[1] in mid} <= found


def test_all_edges_matches_single_edge_test():
    for P in (gen_grid(4, 4), gen_channel(4).points, gen_hourglass(3).points):
        expected = {e for e in valid_edges(P) if is_flip_cut_edge(P, e)[0]}
        assert all_flip_cut_edges(P) == expected


def test_all_edges_parallel_matches_serial():
    G = gen_grid(5, 5)
    assert all_flip_cut_edges(G, parallel=True, workers=2) == all_flip_cut_edges(G)


def _staircase_ok(A, B, Z):
    ia = {a: i for i, a in enumerate(A)}
    jb = {b: j for j, b in enumerate(B)}
    pairs = {(ia[a], jb[b]) if a in ia else (ia[b], jb[a]) for a, b in Z}
    for b in range(len(B)):
        idx = sorted(i for i, j in pairs if j == b)
        if idx and idx != list(range(idx[0], idx[-1] + 1)):
            return False
    for i1, j2 in pairs:
        for i2, j1 in pairs:
            if i1 <= i2 and j1 <= j2:
                if any((i, j) not in pairs for i in range(i1, i2 + 1) for j in range(j1, j2 + 1)):
                    return False
    return True


@given(point_sets(min_size=4, max_size=10))
def test_apex_sets_and_z_structure(P):
    for e in valid_edges(P):
        u, v = e
        ap = apex_orders(P, e)
        assert set(ap.A) == ec3_apexes(P, u, v)
        assert set(ap.B) == ec3_apexes(P, v, u)
        Z = z_edges(P, e)
        # every crossing apex pair is in Z, and nothing else is
        crossing = {make_edge(a, b) for a in ap.A for b in ap.B} & crossing_edges(P, e)
        assert crossing == Z
        assert _staircase_ok(ap.A, ap.B, Z)
        zc = z_components(ap, P)
        brute = line_graph_components(Z)
        assert sorted(sorted(c) for c in brute) == sorted(
            sorted(f for f in Z if zc.component_of(f) == k) for k in range(zc.count)
        )
        assert zc.count <= len(P)


@given(point_sets(min_size=4, max_size=10))
def test_apex_order_decreasing_angle(P):
    for u, v in valid_edges(P):
        for s, t, side in ((u, v, "A"), (v, u, "B")):
            ap = apex_orders(P, (u, v))
            seq = ap.A if side == "A" else ap.B
            # A is ordered by decreasing angle at u, so B by decreasing angle at v
            pivot, other = (u, v) if side == "A" else (v, u)
            for a, b in zip(seq, seq[1:]):
                o = orient(P[pivot], P[a], P[b])
                assert o <= 0
                if o == 0:
                    da = (P[a][0] - P[pivot][0]) ** 2 + (P[a][1] - P[pivot][1]) ** 2
                    db = (P[b][0] - P[pivot][0]) ** 2 + (P[b][1] - P[pivot][1]) ** 2
                    assert da != db


def test_representative_edges():
    F = gen_hourglass(3)
    P = F.points
    u, v = F.names["u"], F.names["v"]
    a2, b2 = F.names["a"][1], F.names["b"][1]
    T = constrained_triangulation(P, [(a2, b2)])
    assert representative_z_edge(T, (u, v)) == make_edge(a2, b2)
    T = constrained_triangulation(G3, [(g(0, 2), g(1, 0))])
    zc = z_components(apex_orders(G3, (g(0, 1), g(1, 1))), G3)
    f = representative_z_edge(T, (g(0, 1), g(1, 1)))
    assert zc.component_of(f) == zc.component_of((g(0, 2), g(1, 0)))


def test_same_component_examples():
    F = gen_hourglass(2)
    P = F.points
    u, v = F.names["u"], F.names["v"]
    (a1, a2), (b1, b2) = F.names["a"], F.names["b"]
    T1 = constrained_triangulation(P, [(a1, b1)])
    T2 = constrained_triangulation(P, [(a2, b2)])
    assert same_component(P, (u, v), T1, T1)
    assert not same_component(P, (u, v), T1, T2)
    with pytest.raises(TriangulationError):
        same_component(P, (u, v), constrained_triangulation(P, [(u, v)]), T2)


def test_same_component_convex_always_true():
    C = gen_convex(7)
    Ts = enumerate_triangulations(C)
    for e in [(0, 2), (0, 3), (1, 4)]:
        av = [T for T in Ts if e not in T]
        for T1 in av[:8]:
            for T2 in av[-8:]:
                assert same_component(C, e, T1, T2)


@settings(max_examples=25)
@given(point_sets(min_size=4, max_size=7))
def test_same_component_matches_oracle(P):
    for e in valid_edges(P):
        g = bf_flip_graph(P, [e])
        comps = g.components()
        if not crossing_edges(P, e):
            assert not g.nodes
            continue
        zc = z_components(apex_orders(P, e), P)
        assert zc.count == len(comps)
        lab = g.labels()
        for T1 in g.nodes:
            for T2 in g.nodes[:4]:
                assert same_component(P, e, T1, T2, zc) == (lab[T1] == lab[T2])


def test_edge_report_json():
    rep = analyze_edge(G3, (g(0, 1), g(1, 1)))
    js = rep.to_json()
    assert js["edge"] == [3, 4] and js["flip_cut"] is True and js["component_count"] == 2
    assert sorted(map(lambda c: (tuple(c["A"]), tuple(c["B"])), js["components"])) == [((6,), (1,)), ((7,), (0,))]


def test_invalid_edge_rejected():
    from flipcut.geometry import GeometryError
    with pytest.raises(GeometryError):
        is_flip_cut_edge(G3, (0, 2))
