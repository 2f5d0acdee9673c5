"""Gauge transformations and their action on the isotypical blocks.

A connection assigns a group element to every edge.  A gauge transformation
assigns a group element to every vertex and acts on connections by

    (g . a)_e = g_{source(e)} * a_e * g_{target(e)}^{-1},

The unitary on block functions is ``(rho(g) psi)(a) = psi(g^{-1} . a)``,
which per edge reads

    conj(D(g_source)) (x) D(g_target)

on the (row, column) index pair.  The vertex Lie generators accordingly
place ``conj(dD(X))`` on row factors of outgoing edges and ``dD(X)`` on
column factors of incoming ones; a loop at the vertex receives both on its
single tensor factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blocks import BlockLabel, kron_chain
from .graphs import Graph
from .groups import (
    GroupId,
    GroupPoint,
    IrrepLabel,
    exp_point,
    identity_point,
    inverse,
    irrep_generator,
    irrep_matrix,
    lie_dim,
    multiply,
)


@dataclass(frozen=True)
class GaugeElement:
    """One group element per vertex."""

    graph: Graph
    points: tuple[GroupPoint, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.graph.vertices):
            raise ValueError("need exactly one point per vertex")

    def at(self, vertex: str) -> GroupPoint:
        return self.points[self.graph.vertex_index[vertex]]


@dataclass(frozen=True)
class Connection:
    """One group element per edge."""

    graph: Graph
    points: tuple[GroupPoint, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.graph.edges):
            raise ValueError("need exactly one point per edge")

    def at(self, edge_id: str) -> GroupPoint:
        return self.points[self.graph.edge_index[edge_id]]


@dataclass(frozen=True)
class VertexGenerator:
    """A Lie algebra basis direction attached to one vertex."""

    vertex: str
    lie_index: int


def gauge_act(g: GaugeElement, a: Connection) -> Connection:
    new = tuple(
        multiply(multiply(g.at(e.source), a.at(e.id)), inverse(g.at(e.target)))
        for e in a.graph.edges
    )
    return Connection(a.graph, new)


def exp_gauge(graph: Graph, group: GroupId, gen: VertexGenerator, t: float) -> GaugeElement:
    """The one-parameter gauge transformation exp(t X) supported on one vertex."""
    coeffs = np.zeros(lie_dim(group))
    coeffs[gen.lie_index] = t
    pts = tuple(
        exp_point(group, coeffs) if v == gen.vertex else identity_point(group)
        for v in graph.vertices
    )
    return GaugeElement(graph, pts)


def rho_block(block: BlockLabel, g: GaugeElement) -> np.ndarray:
    """Matrix of the gauge transformation on one block."""
    factors = []
    for e, lab in zip(block.graph.edges, block.labels):
        lm = np.conj(irrep_matrix(lab, g.at(e.source)))
        rm = irrep_matrix(lab, g.at(e.target))
        factors.append(np.kron(lm, rm))
    return kron_chain(factors)


def gauss_generator_block(block: BlockLabel, gen: VertexGenerator) -> np.ndarray:
    """Block matrix of d/dt rho(exp(t X)) at t = 0 for a vertex generator."""
    graph = block.graph
    d = block.dim
    out = np.zeros((d, d), dtype=complex)
    for e, lab in zip(graph.edges, block.labels):
        x = irrep_generator(lab, gen.lie_index)
        de = lab.dim
        piece = np.zeros((de * de, de * de), dtype=complex)
        if e.source == gen.vertex:
            piece += np.kron(np.conj(x), np.eye(de))
        if e.target == gen.vertex:
            piece += np.kron(np.eye(de), x)
        if not piece.any():
            continue
        factors = [
            piece if f.id == e.id else np.eye(l.dim**2)
            for f, l in zip(graph.edges, block.labels)
        ]
        out += kron_chain(factors)
    return out


def block_generators(block: BlockLabel) -> list[np.ndarray]:
    """All vertex Gauss generators of the block, vertex-major then Lie index."""
    group = block.labels[0].group if block.labels else GroupId.U1
    return [
        gauss_generator_block(block, VertexGenerator(v, k))
        for v in block.graph.vertices
        for k in range(lie_dim(group))
    ]


def basis_values(block: BlockLabel, a: Connection) -> np.ndarray:
    """Values of the block's orthonormal basis functions at a connection.

    Returns a vector over the block's (row, column) index pairs; entry
    ``(m, n)`` is ``prod_e sqrt(dim) * D(a_e)[m_e, n_e]``.
    """
    factors = []
    for e, lab in zip(block.graph.edges, block.labels):
        m = irrep_matrix(lab, a.at(e.id))
        factors.append(np.sqrt(lab.dim) * m.reshape(-1, 1))
    return kron_chain(factors).ravel()


def vertex_flux(block: BlockLabel, vertex: str) -> int:
    """U(1) charge imbalance at a vertex: incoming minus outgoing labels.

    The single Gauss generator of a U(1) block at the vertex is ``1j`` times
    this integer, so a block meets the gauge-invariant subspace exactly when
    every vertex flux vanishes.
    """
    if any(lab.group is not GroupId.U1 for lab in block.labels):
        raise ValueError("vertex flux is defined for U(1) blocks only")
    flux = 0
    for e, lab in zip(block.graph.edges, block.labels):
        if e.target == vertex:
            flux += lab.value
        if e.source == vertex:
            flux -= lab.value
    return flux
