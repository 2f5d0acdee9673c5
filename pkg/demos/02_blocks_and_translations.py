"""Isotypical blocks of the field space and two-sided translations.

The square-integrable functions of one group element per edge split into
finite blocks indexed by an irrep label per edge.  Each block is spanned by
rescaled matrix coefficients; translating an edge argument acts by a
Kronecker factor on that edge's (row, column) pair.
"""

import numpy as np

from gaugereduce import (
    Connection,
    Graph,
    Truncation,
    basis_values,
    inverse,
    multiply,
    random_point,
    regular_action_block,
    su2_spin,
)
from gaugereduce.groups import GroupId

graph = Graph(("x", "y"), [("e", "x", "y"), ("f", "y", "x")])
trunc = Truncation(graph, GroupId.SU2, su2_spin(0.5))

print("graph: two vertices joined by a pair of opposite edges e, f")
print(f"truncation at spin bound 1/2: {len(trunc.blocks)} blocks, "
      f"total dimension {trunc.total_dim}")
for block, dim in zip(trunc.blocks, trunc.dims):
    labels = ", ".join(f"{lab.value}/2" for lab in block.labels)
    print(f"  spins ({labels})  dim = {dim}")

print("\n== basis functions transform by the transposed action matrix ==")
rng = np.random.default_rng(1)
block = trunc.blocks[-1]  # spin 1/2 on both edges
a = Connection(graph, (random_point(GroupId.SU2, rng), random_point(GroupId.SU2, rng)))
g = random_point(GroupId.SU2, rng)

m = regular_action_block(block, "e", g, None)
moved = Connection(graph, (multiply(inverse(g), a.at("e")), a.at("f")))
lhs = basis_values(block, moved)
rhs = m.T @ basis_values(block, a)
print(f"  left-translating edge e: pointwise defect {np.abs(lhs - rhs).max():.2e}")

h = random_point(GroupId.SU2, rng)
m2 = regular_action_block(block, "f", None, h)
moved2 = Connection(graph, (a.at("e"), multiply(a.at("f"), h)))
lhs2 = basis_values(block, moved2)
rhs2 = m2.T @ basis_values(block, a)
print(f"  right-translating edge f: pointwise defect {np.abs(lhs2 - rhs2).max():.2e}")

print("\n== the translation matrices are unitary and multiplicative ==")
u = regular_action_block(block, "e", g, h)
v = regular_action_block(block, "e", inverse(g), inverse(h))
print(f"  U(g,h) U(g^-1,h^-1) = 1 up to {np.abs(u @ v - np.eye(block.dim)).max():.2e}")
