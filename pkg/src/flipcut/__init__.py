"""Flip cut edges of planar point sets: fast tests, exhaustive oracles,
convex-position cut sets and point set generators."""
from .geometry import GeometryError, Point, PointSet, is_edge, make_edge, orient, valid_edges
from .triangulation import (
    FlipMove,
    Triangulation,
    TriangulationError,
    apply_flip,
    constrained_triangulation,
    enumerate_triangulations,
    flippable,
    validate,
)
from .core import (
    EdgeReport,
    ZComponents,
    all_flip_cut_edges,
    analyze_edge,
    apex_orders,
    is_flip_cut_edge,
    same_component,
    z_components,
    z_edges,
)
from .convex import ConvexError, FlipPath, connect_avoiding, flip_to_star, zigzag_cut_set
from .generators import gen_channel, gen_convex, gen_grid, gen_hourglass, gen_random
from .oracle import bf_flip_graph, bf_is_flip_cut

__version__ = "0.1.0"
