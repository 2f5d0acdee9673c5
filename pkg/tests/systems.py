"""Shared example systems: small graphs with known reduction data.

The expected counts below were derived by hand before the implementation
existed and are frozen; see the individual test modules for the
independent routes that recompute them.
"""

from gaugereduce import Graph, IrrepLabel, Truncation
from gaugereduce.groups import GroupId

U1 = GroupId.U1
SU2 = GroupId.SU2


def edge_graph():
    return Graph(("x", "y"), [("e", "x", "y")])


def parallel_graph():
    return Graph(("x", "y"), [("e", "x", "y"), ("f", "x", "y")])


def triangle_graph():
    return Graph(
        ("x", "y", "z"), [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")]
    )


def loop_graph():
    return Graph(("x",), [("l", "x", "x")])


def make(graph, group, bound):
    return Truncation(graph, group, IrrepLabel(group, bound))


# name -> (graph builder, group, bound,
#          dim commutant, dim invariants, dim kernel, saturating power)
CANON = {
    "u1-edge-b1": (edge_graph, U1, 1, 3, 1, 2, 1),
    "u1-edge-b2": (edge_graph, U1, 2, 5, 1, 4, 1),
    "u1-parallel-b1": (parallel_graph, U1, 1, 19, 3, 10, 1),
    "u1-parallel-b2": (parallel_graph, U1, 2, 85, 5, 60, 1),
    "u1-triangle-b1": (triangle_graph, U1, 1, 45, 3, 36, 1),
    "u1-triangle-b2": (triangle_graph, U1, 2, 325, 5, 300, 1),
    "u1-loop-b1": (loop_graph, U1, 1, 9, 3, 0, 1),
    "su2-loop-j1": (loop_graph, SU2, 1, 5, 2, 1, 2),
    "su2-loop-j2": (loop_graph, SU2, 2, 14, 3, 5, 2),
    "su2-edge-j1": (edge_graph, SU2, 1, 2, 1, 1, 2),
    "su2-edge-j2": (edge_graph, SU2, 2, 3, 1, 2, 2),
}

SMALL = [k for k in CANON if k not in ("u1-triangle-b2", "u1-parallel-b2")]


def build(name):
    builder, group, bound, *_ = CANON[name]
    return make(builder(), group, bound)
