"""Gauge reduction machinery.

Three objects are produced from a truncation:

* the invariant subspace of the field space (joint kernel of the vertex
  Gauss generators, or equivalently the range of the Haar-averaged
  projector),
* an orthonormal basis of the commutant algebra -- the block operators
  commuting with every gauge transformation -- computed pair-of-blocks at
  a time, which is the whole answer because the generators are block
  diagonal,
* the matrix of the restriction map ``pi`` sending a commutant element to
  its compression onto the invariant subspace, and a basis of its kernel.

Everything is finite-dimensional linear algebra; ranks are decided at a
single relative tolerance so the counts reported downstream are stable.
"""

from __future__ import annotations

import itertools

import numpy as np
from scipy.linalg import null_space

from .blocks import BlockLabel, Truncation
from .blockop import BlockOperator
from .graphs import Graph
from .groups import (
    GroupId,
    IrrepLabel,
    haar_scheme,
    lie_dim,
    required_band,
)
from .lattice import GaugeElement, block_generators, vertex_flux

RANK_RTOL = 1e-10


class BandError(ValueError):
    """A quadrature band too small for the integrand it must handle."""

    def __init__(self, required: IrrepLabel, given: IrrepLabel):
        self.required = required
        self.given = given
        super().__init__(
            f"quadrature band {given.value} cannot integrate this action "
            f"exactly; need at least {required.value}"
        )


class SpanConsistencyError(RuntimeError):
    """A product of commutant elements left their numerical span."""


class SubspaceBasis:
    """An orthonormal set of row vectors spanning a subspace."""

    def __init__(self, ambient_dim: int, vectors: np.ndarray | None = None):
        self.ambient_dim = ambient_dim
        if vectors is None:
            vectors = np.zeros((0, ambient_dim), dtype=complex)
        self.vectors = np.asarray(vectors, dtype=complex).reshape(-1, ambient_dim)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @classmethod
    def from_spanning(
        cls, ambient_dim: int, rows: np.ndarray, rtol: float = RANK_RTOL
    ) -> "SubspaceBasis":
        rows = np.asarray(rows, dtype=complex).reshape(-1, ambient_dim)
        if rows.shape[0] == 0:
            return cls(ambient_dim)
        u, s, vh = np.linalg.svd(rows, full_matrices=False)
        keep = s > rtol * max(1.0, s[0])
        return cls(ambient_dim, vh[keep])

    def project_out(self, rows: np.ndarray) -> np.ndarray:
        """Components of the given rows orthogonal to the subspace."""
        if self.dim == 0:
            return rows
        return rows - (rows @ self.vectors.conj().T) @ self.vectors


def projector_band(block: BlockLabel) -> IrrepLabel:
    """Smallest per-vertex band that averages this block's action exactly.

    The integrand at a vertex is a product of one coefficient function per
    incident edge endpoint (a loop contributes two), so the band must cover
    half the summed label degrees, rounded up.
    """
    group = block.labels[0].group
    worst = 0
    for v in block.graph.vertices:
        total = 0
        for e, as_src, as_tgt in block.graph.incidences(v):
            deg = block.label_for(e.id).degree
            total += deg * (int(as_src) + int(as_tgt))
        worst = max(worst, total)
    return required_band(group, worst)


def _gauge_scheme(graph: Graph, group: GroupId, band: IrrepLabel):
    """Product quadrature over one copy of the group per vertex."""
    one = haar_scheme(group, band)
    nv = len(graph.vertices)
    for combo in itertools.product(range(len(one.points)), repeat=nv):
        g = GaugeElement(graph, tuple(one.points[k] for k in combo))
        w = float(np.prod([one.weights[k] for k in combo]))
        yield w, g


def invariant_projector(
    block: BlockLabel, method: str = "lie", band: IrrepLabel | None = None
) -> np.ndarray:
    """Orthogonal projector onto the gauge-invariant vectors of a block.

    ``method="lie"`` intersects the kernels of the vertex generators;
    ``method="quadrature"`` averages the block action over an exact Haar
    scheme.  Both agree to rank tolerance on every system.
    """
    if method == "lie":
        v = _invariant_columns(block)
        return v @ v.conj().T
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")
    need = projector_band(block)
    if band is None:
        band = need
    elif band.degree < need.degree:
        raise BandError(need, band)
    from .lattice import rho_block

    group = block.labels[0].group
    out = np.zeros((block.dim, block.dim), dtype=complex)
    for w, g in _gauge_scheme(block.graph, group, band):
        out += w * rho_block(block, g)
    return out


def _invariant_columns(block: BlockLabel) -> np.ndarray:
    """Orthonormal columns spanning the block's invariant vectors."""
    gens = block_generators(block)
    if not gens:
        return np.eye(block.dim, dtype=complex)
    if block.dim == 1:
        flat = all(abs(g[0, 0]) <= RANK_RTOL for g in gens)
        return np.ones((1, 1), complex) if flat else np.zeros((1, 0), complex)
    stacked = np.vstack(gens)
    return null_space(stacked, rcond=RANK_RTOL)


def invariant_basis(trunc: Truncation, method: str = "lie") -> SubspaceBasis:
    """Orthonormal basis of the invariant subspace of the whole truncation."""
    rows = []
    for i, block in enumerate(trunc.blocks):
        if method == "lie":
            cols = _invariant_columns(block)
        else:
            p = invariant_projector(block, method=method)
            vals, vecs = np.linalg.eigh(p)
            cols = vecs[:, vals > 0.5]
        for k in range(cols.shape[1]):
            vec = np.zeros(trunc.total_dim, dtype=complex)
            vec[trunc.offsets[i] : trunc.offsets[i + 1]] = cols[:, k]
            rows.append(vec)
    if not rows:
        return SubspaceBasis(trunc.total_dim)
    return SubspaceBasis(trunc.total_dim, np.array(rows))


class EquivariantSpace:
    """Orthonormal basis of the commutant, kept block pair by block pair.

    Element ``k`` is a triple ``(i, j, m)``: a matrix ``m`` mapping block
    ``j`` into block ``i``.  Frobenius inner products make the basis
    orthonormal, and elements on different pairs are orthogonal for free.
    """

    def __init__(self, trunc: Truncation, elements):
        self.trunc = trunc
        self.elements = tuple(elements)
        self._structure = None

    @property
    def dim(self) -> int:
        return len(self.elements)

    def element_op(self, k: int) -> BlockOperator:
        i, j, m = self.elements[k]
        return BlockOperator.from_pair(self.trunc, i, j, m)

    def coords_of(self, op: BlockOperator) -> np.ndarray:
        out = np.zeros(self.dim, dtype=complex)
        for k, (i, j, m) in enumerate(self.elements):
            blk = op.data.get((i, j))
            if blk is not None:
                out[k] = np.vdot(m, blk)
        return out

    def op_from_coords(self, w: np.ndarray) -> BlockOperator:
        out = BlockOperator(self.trunc)
        for k, c in enumerate(w):
            if c == 0:
                continue
            i, j, m = self.elements[k]
            key = (i, j)
            if key in out.data:
                out.data[key] = out.data[key] + c * m
            else:
                out.data[key] = c * m
        return out

    def structure_maps(self):
        """Sparse product tables: row ``j*q + m`` of ``L @ w`` is the m-th
        coordinate of ``basis[j] @ op(w)``, and of ``R @ w`` the m-th
        coordinate of ``op(w) @ basis[j]``.

        Raises ``SpanConsistencyError`` if any pairwise product fails to be
        resolved inside the basis span, which would falsify every closure
        computed from the tables.
        """
        if self._structure is not None:
            return self._structure
        from scipy.sparse import csr_matrix

        q = self.dim
        by_row: dict[int, list[int]] = {}
        by_col: dict[int, list[int]] = {}
        by_pair: dict[tuple[int, int], list[int]] = {}
        for k, (i, j, _) in enumerate(self.elements):
            by_row.setdefault(i, []).append(k)
            by_col.setdefault(j, []).append(k)
            by_pair.setdefault((i, j), []).append(k)
        lrows, lcols, lvals = [], [], []
        rrows, rcols, rvals = [], [], []
        for mid in by_col:
            for a in by_col[mid]:  # basis[a] ends in block `mid`
                ia, _, ma = self.elements[a]
                for b in by_row.get(mid, ()):  # basis[b] starts there
                    _, jb, mb = self.elements[b]
                    prod = ma @ mb
                    norm2 = np.vdot(prod, prod).real
                    resolved = 0.0
                    for m in by_pair.get((ia, jb), ()):
                        c = np.vdot(self.elements[m][2], prod)
                        if abs(c) > 0:
                            lrows.append(a * q + m)
                            lcols.append(b)
                            lvals.append(c)
                            rrows.append(b * q + m)
                            rcols.append(a)
                            rvals.append(c)
                            resolved += abs(c) ** 2
                    if norm2 - resolved > RANK_RTOL * max(1.0, norm2):
                        raise SpanConsistencyError(
                            f"product of elements {a} and {b} leaves the span "
                            f"(missing weight {norm2 - resolved:.3e})"
                        )
        shape = (q * q, q)
        self._structure = (
            csr_matrix((lvals, (lrows, lcols)), shape=shape),
            csr_matrix((rvals, (rrows, rcols)), shape=shape),
        )
        return self._structure


def _pair_solutions(gi, gj, di: int, dj: int) -> list[np.ndarray]:
    """Matrices intertwining the generator lists of two blocks."""
    if di == 1 and dj == 1:
        ok = all(abs(a[0, 0] - b[0, 0]) <= RANK_RTOL for a, b in zip(gi, gj))
        return [np.ones((1, 1), complex)] if ok else []
    rows = []
    idn_i = np.eye(di)
    idn_j = np.eye(dj)
    for a, b in zip(gi, gj):
        rows.append(np.kron(a, idn_j) - np.kron(idn_i, b.T))
    ns = null_space(np.vstack(rows), rcond=RANK_RTOL)
    return [ns[:, k].reshape(di, dj) for k in range(ns.shape[1])]


def commutant_basis(trunc: Truncation) -> EquivariantSpace:
    """Orthonormal basis of the operators commuting with the gauge action."""
    gens = [block_generators(b) for b in trunc.blocks]
    u1 = trunc.group is GroupId.U1
    flux = None
    if u1:
        flux = [
            tuple(vertex_flux(b, v) for v in trunc.graph.vertices)
            for b in trunc.blocks
        ]
    elements = []
    n = len(trunc.blocks)
    for i in range(n):
        for j in range(n):
            if u1:
                if flux[i] != flux[j]:
                    continue
                elements.append((i, j, np.ones((1, 1), complex)))
                continue
            for m in _pair_solutions(
                gens[i], gens[j], trunc.dims[i], trunc.dims[j]
            ):
                elements.append((i, j, m))
    return EquivariantSpace(trunc, elements)


def pi_matrix(space: EquivariantSpace, inv: SubspaceBasis) -> np.ndarray:
    """Matrix of the compression map onto the invariant subspace.

    Columns follow the commutant basis; rows are the flattened matrix units
    of the invariant-subspace basis.
    """
    h = inv.dim
    off = space.trunc.offsets
    out = np.zeros((h * h, space.dim), dtype=complex)
    if h == 0:
        return out
    for k, (i, j, m) in enumerate(space.elements):
        ui = inv.vectors[:, off[i] : off[i + 1]]
        uj = inv.vectors[:, off[j] : off[j + 1]]
        out[:, k] = (ui.conj() @ m @ uj.T).ravel()
    return out


def kernel_pi_basis(space: EquivariantSpace, inv: SubspaceBasis) -> SubspaceBasis:
    """Orthonormal basis, in commutant coordinates, of the kernel of the
    compression map; the whole commutant when the invariant space is zero."""
    q = space.dim
    if inv.dim == 0:
        return SubspaceBasis(q, np.eye(q, dtype=complex))
    mat = pi_matrix(space, inv)
    ns = null_space(mat, rcond=RANK_RTOL)
    return SubspaceBasis(q, ns.T)
