"""Averaged generator powers and the two-sided ideal they generate.

For each vertex Lie direction the truncated field algebra carries a Gauss
generator; the objects of interest are its powers conjugated by gauge
transformations and averaged over the gauge group,

    avg_n = integral of rho(k) Gamma^n rho(k)^{-1} dk.

Averaging lands in the commutant, block by block, and equals the
Frobenius-orthogonal projection onto it; that gives two independent routes
to the same element (exact Haar quadrature versus projection onto the
Lie-computed commutant basis) which the tests compare.

The closure step works entirely in commutant coordinates.  Because the
commutant is a unital algebra whose basis products are resolved by sparse
structure tables, the two-sided ideal generated by a set of seeds is the
span of ``basis * seed * basis``; a short round-based sweep of left and
right multiplications reaches it and then verifies stability.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .blocks import BlockLabel, Truncation
from .blockop import BlockOperator
from .groups import GroupId, IrrepLabel, lie_dim
from .lattice import VertexGenerator, gauss_generator_block, rho_block
from .reduction import (
    RANK_RTOL,
    BandError,
    EquivariantSpace,
    SubspaceBasis,
    _gauge_scheme,
    commutant_basis,
    invariant_basis,
    kernel_pi_basis,
)

MINIMUM_SEED = 1e-12


@dataclass(frozen=True)
class GeneratorSpec:
    """One averaged generator power, restricted to one block."""

    block: int
    vertex: str
    lie_index: int
    power: int


def conjugation_band(block: BlockLabel) -> IrrepLabel:
    """Smallest per-vertex band that averages conjugation on this block.

    Conjugating puts the block action on both sides of the generator, so
    the degree count of the projector doubles: the band must cover the full
    summed label degree at the busiest vertex.
    """
    group = block.labels[0].group
    worst = 0
    for v in block.graph.vertices:
        total = 0
        for e, as_src, as_tgt in block.graph.incidences(v):
            total += block.label_for(e.id).degree * (int(as_src) + int(as_tgt))
        worst = max(worst, total)
    return IrrepLabel(group, worst)


def generator_op(
    trunc: Truncation, spec: GeneratorSpec, band: IrrepLabel | None = None
) -> BlockOperator:
    """Haar average of a generator power on one block, by exact quadrature.

    One-dimensional blocks conjugate trivially, so the power itself is
    returned; otherwise the gauge group is swept with a scheme wide enough
    for the conjugated action.
    """
    block = trunc.blocks[spec.block]
    gamma = gauss_generator_block(block, VertexGenerator(spec.vertex, spec.lie_index))
    gn = np.linalg.matrix_power(gamma, spec.power)
    if block.dim == 1:
        return BlockOperator.from_pair(trunc, spec.block, spec.block, gn)
    need = conjugation_band(block)
    if band is None:
        band = need
    elif band.degree < need.degree:
        raise BandError(need, band)
    out = np.zeros((block.dim, block.dim), dtype=complex)
    for w, g in _gauge_scheme(block.graph, trunc.group, band):
        rho = rho_block(block, g)
        out += w * (rho @ gn @ rho.conj().T)
    return BlockOperator.from_pair(trunc, spec.block, spec.block, out)


def generator_coords(
    space: EquivariantSpace,
    spec: GeneratorSpec,
    method: str = "lie",
    band: IrrepLabel | None = None,
) -> np.ndarray:
    """Commutant coordinates of the averaged generator power.

    ``method="lie"`` exploits that averaging is the orthogonal projection
    onto the commutant: the coordinates of the average are the inner
    products of the raw power with the basis.  ``method="quadrature"``
    averages explicitly first.  The two agree to quadrature accuracy.
    """
    trunc = space.trunc
    if method == "lie":
        block = trunc.blocks[spec.block]
        gamma = gauss_generator_block(
            block, VertexGenerator(spec.vertex, spec.lie_index)
        )
        gn = np.linalg.matrix_power(gamma, spec.power)
        raw = BlockOperator.from_pair(trunc, spec.block, spec.block, gn)
        return space.coords_of(raw)
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")
    return space.coords_of(generator_op(trunc, spec, band=band))


def ideal_closure(
    space: EquivariantSpace,
    seeds: np.ndarray,
    start: SubspaceBasis | None = None,
    rtol: float = RANK_RTOL,
) -> SubspaceBasis:
    """Two-sided ideal generated by the seed coordinate rows.

    Optionally continues from an already-closed subspace, in which case
    only genuinely new directions are multiplied out.
    """
    left, right = space.structure_maps()
    q = space.dim
    basis = (
        start.vectors.copy() if start is not None else np.zeros((0, q), complex)
    )

    def absorb(rows: np.ndarray) -> np.ndarray:
        nonlocal basis
        if rows.shape[0] == 0:
            return rows
        for _ in range(2):
            if basis.shape[0]:
                rows = rows - (rows @ basis.conj().T) @ basis
        norms = np.linalg.norm(rows, axis=1)
        rows = rows[norms > MINIMUM_SEED]
        if rows.shape[0] == 0:
            return rows
        _, s, vh = np.linalg.svd(rows, full_matrices=False)
        fresh = vh[s > rtol * max(1.0, s[0])]
        basis = np.vstack([basis, fresh]) if basis.shape[0] else fresh
        return fresh

    norms = np.linalg.norm(seeds, axis=1) if seeds.shape[0] else np.zeros(0)
    live = seeds[norms > MINIMUM_SEED]
    live = live / np.linalg.norm(live, axis=1, keepdims=True) if live.shape[0] else live
    pending = absorb(live)
    while pending.shape[0]:
        batches = []
        for w in pending:
            for table in (left, right):
                block = (table @ w).reshape(q, q)
                keep = np.linalg.norm(block, axis=1) > MINIMUM_SEED
                if keep.any():
                    batches.append(block[keep])
        pending = (
            absorb(np.vstack(batches)) if batches else np.zeros((0, q), complex)
        )
    return SubspaceBasis(q, basis)


def subspace_distance(u: SubspaceBasis, v: SubspaceBasis) -> float:
    """Operator-norm distance between the orthogonal projectors."""
    if u.dim == 0 and v.dim == 0:
        return 0.0
    n = u.ambient_dim
    pu = u.vectors.conj().T @ u.vectors if u.dim else np.zeros((n, n))
    pv = v.vectors.conj().T @ v.vectors if v.dim else np.zeros((n, n))
    return float(np.max(np.abs(np.linalg.eigvalsh(pu - pv))))


def containment_residual(inner: SubspaceBasis, outer: SubspaceBasis) -> float:
    """Largest leftover norm when projecting the inner basis on the outer."""
    if inner.dim == 0:
        return 0.0
    rest = outer.project_out(inner.vectors)
    return float(np.max(np.linalg.norm(rest, axis=1)))


@dataclass(frozen=True)
class IdealRow:
    n: int
    dim_ideal: int
    containment_residual: float
    distance: float


@dataclass(frozen=True)
class IdealReport:
    group: GroupId
    bound: int
    n_max: int
    method: str
    tolerance: float
    coarse: bool
    n_groups: int
    dim_total: int
    n_blocks: int
    dim_hk: int
    dim_ak: int
    dim_ker_pi: int
    rows: tuple[IdealRow, ...]
    passed: bool
    seconds: float
    block_labels: tuple[tuple[int, ...], ...] = field(default=())
    final_ideal: SubspaceBasis | None = field(default=None, repr=False)
    kernel: SubspaceBasis | None = field(default=None, repr=False)


def default_n_max(trunc: Truncation) -> int:
    return max(trunc.dims)


def verify_ideal(
    trunc: Truncation,
    n_max: int | None = None,
    tol: float = 1e-8,
    method: str = "lie",
    band: IrrepLabel | None = None,
    sigma_groups: tuple[tuple[int, ...], ...] | None = None,
) -> IdealReport:
    """Compare the kernel of the invariant compression with the averaged
    generator ideal, power by power up to ``n_max``.

    ``sigma_groups`` optionally merges blocks: each group contributes one
    summed generator per vertex direction and power instead of one per
    block.  The resulting ideal is unchanged because the block projectors
    themselves commute with the gauge action.
    """
    t0 = time.perf_counter()
    if n_max is None:
        n_max = default_n_max(trunc)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    space = commutant_basis(trunc)
    inv = invariant_basis(trunc, method=method)
    kernel = kernel_pi_basis(space, inv)
    groups = (
        sigma_groups
        if sigma_groups is not None
        else tuple((i,) for i in range(len(trunc.blocks)))
    )
    coarse = sigma_groups is not None
    rows = []
    ideal = None
    for n in range(1, n_max + 1):
        seeds = []
        for members in groups:
            for v in trunc.graph.vertices:
                for a in range(lie_dim(trunc.group)):
                    w = np.zeros(space.dim, dtype=complex)
                    for i in members:
                        w += generator_coords(
                            space,
                            GeneratorSpec(i, v, a, n),
                            method=method,
                            band=band,
                        )
                    seeds.append(w)
        seeds = np.array(seeds) if seeds else np.zeros((0, space.dim), complex)
        ideal = ideal_closure(space, seeds, start=ideal)
        rows.append(
            IdealRow(
                n=n,
                dim_ideal=ideal.dim,
                containment_residual=containment_residual(ideal, kernel),
                distance=subspace_distance(ideal, kernel),
            )
        )
    last = rows[-1]
    passed = last.distance <= tol and last.containment_residual <= tol
    return IdealReport(
        group=trunc.group,
        bound=trunc.bound.value,
        n_max=n_max,
        method=method,
        tolerance=tol,
        coarse=coarse,
        n_groups=len(groups),
        dim_total=trunc.total_dim,
        n_blocks=len(trunc.blocks),
        dim_hk=inv.dim,
        dim_ak=space.dim,
        dim_ker_pi=kernel.dim,
        rows=tuple(rows),
        passed=passed,
        seconds=time.perf_counter() - t0,
        block_labels=tuple(
            tuple(lab.value for lab in b.labels) for b in trunc.blocks
        ),
        final_ideal=ideal,
        kernel=kernel,
    )
