"""Isotypical blocks of the field Hilbert space under two-sided translation.

The square-integrable functions on G^edges decompose into blocks indexed by
one irrep label per edge.  The block of labels ``(d_e)`` has an orthonormal
basis of rescaled matrix coefficients

    psi_{m,n}(a) = prod_e sqrt(dim d_e) * D^{d_e}(a_e)[m_e, n_e],

and carries left translation on the row indices and right translation on
the column indices, edge by edge.  We keep the (row, column) index pair of
each edge together and flatten row-major, then take the Kronecker product
over edges in declaration order; a block therefore has dimension
``prod_e dim(d_e)**2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .groups import GroupId, GroupPoint, IrrepLabel, irrep_matrix, labels_within


@dataclass(frozen=True)
class BlockLabel:
    """One irrep label per edge, in edge declaration order."""

    graph: Graph
    labels: tuple[IrrepLabel, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.graph.edges):
            raise ValueError("need exactly one label per edge")

    @property
    def dim(self) -> int:
        d = 1
        for lab in self.labels:
            d *= lab.dim**2
        return d

    def label_for(self, edge_id: str) -> IrrepLabel:
        return self.labels[self.graph.edge_index[edge_id]]

    def __repr__(self) -> str:
        inner = ",".join(str(lab.value) for lab in self.labels)
        return f"BlockLabel({inner})"


def enumerate_blocks(
    graph: Graph, group: GroupId, bound: IrrepLabel
) -> tuple[BlockLabel, ...]:
    """Every block whose edge labels all have degree at most the bound,
    ordered lexicographically over edges in declaration order."""
    per_edge = labels_within(group, bound)
    return tuple(
        BlockLabel(graph, combo)
        for combo in itertools.product(per_edge, repeat=len(graph.edges))
    )


class Truncation:
    """All blocks with every edge label of degree at most a bound."""

    def __init__(self, graph: Graph, group: GroupId, bound: IrrepLabel):
        if bound.group is not group:
            raise ValueError("bound label belongs to a different group")
        self.graph = graph
        self.group = group
        self.bound = bound
        self.blocks = enumerate_blocks(graph, group, bound)
        self.dims = tuple(b.dim for b in self.blocks)
        self.offsets = tuple(
            int(x) for x in np.concatenate([[0], np.cumsum(self.dims)])
        )
        self.total_dim = self.offsets[-1]
        self.index_of = {b.labels: i for i, b in enumerate(self.blocks)}

    def __repr__(self) -> str:
        return (
            f"Truncation({self.group.value}, bound={self.bound.value}, "
            f"{len(self.blocks)} blocks, dim={self.total_dim})"
        )


def kron_chain(mats) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def regular_action_block(
    block: BlockLabel, edge_id: str, left: GroupPoint | None, right: GroupPoint | None
) -> np.ndarray:
    """Matrix of a one-edge two-sided translation on the block.

    Left translation by ``g`` sends psi(a) to psi(g^{-1} a) and acts on the
    row index as ``conj(D(g))``; right translation by ``h`` sends psi(a) to
    psi(a h) and acts on the column index as ``D(h)``.
    """
    factors = []
    for e, lab in zip(block.graph.edges, block.labels):
        d = lab.dim
        if e.id == edge_id:
            lm = np.conj(irrep_matrix(lab, left)) if left is not None else np.eye(d)
            rm = irrep_matrix(lab, right) if right is not None else np.eye(d)
            factors.append(np.kron(lm, rm))
        else:
            factors.append(np.eye(d * d))
    return kron_chain(factors)
