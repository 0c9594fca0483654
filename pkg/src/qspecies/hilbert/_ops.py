# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Pure functions on states: products, traces and entropies."""

from __future__ import annotations

import functools
import typing as t

import numpy as np
from scipy.linalg import qr

from ._errors import ArgumentError, DimensionError
from ._states import (
    CompositeSpace,
    DensityMatrix,
    StateVector,
    UnitaryMatrix,
    check_capacity,
)
from ._tolerances import get_current_tolerances

__all__ = (
    "Seed",
    "apply_on_factor",
    "entanglement_entropy",
    "inner_product",
    "partial_trace",
    "purity",
    "random_state",
    "random_unitary",
    "reduced_amplitudes",
    "tensor",
    "tensor_power",
    "von_neumann_entropy",
)

Seed = t.Union[int, np.random.Generator, None]
"""Anything accepted by `numpy.random.default_rng()`."""


def inner_product(a: StateVector, b: StateVector) -> complex:
    """Return ⟨a|b⟩, conjugate-linear in *a*.

    Raises:
        DimensionError: if the two states have different dimensions.

    Example:

        >>> plus = StateVector.from_amplitudes([1, 1])
        >>> round(abs(inner_product(StateVector.basis(2, 0), plus)), 8)
        0.70710678
    """
    if a.dim != b.dim:
        raise DimensionError(f"inner product of {a.dim}-dim and {b.dim}-dim states")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Return |a⟩⊗|b⟩ with *a* as the more significant index.

    Example:

        >>> plus = StateVector.from_amplitudes([1, 1])
        >>> np.round(tensor(plus, StateVector.basis(2, 0)).amplitudes.real, 4).tolist()
        [0.7071, 0.0, 0.7071, 0.0]
    """
    check_capacity(a.dim * b.dim)
    return StateVector(np.kron(a.amplitudes, b.amplitudes))


def tensor_power(a: StateVector, copies: int) -> StateVector:
    """Return the *copies*-fold tensor product of *a* with itself.

    Raises:
        ArgumentError: if *copies* is less than one.
        CapacityError: if the result would have more than
            `Tolerances.max_total_dim` amplitudes. This is checked
            before any memory is allocated.
    """
    if copies < 1:
        raise ArgumentError(f"need at least one copy, got {copies}")
    check_capacity(a.dim**copies, f"{copies} copies of a {a.dim}-dim state")
    amplitudes = functools.reduce(np.kron, [a.amplitudes] * copies)
    return StateVector(amplitudes)


def _apply_raw(
    matrix: np.ndarray, vector: np.ndarray, space: CompositeSpace, slot: int
) -> np.ndarray:
    tensor_ = np.reshape(vector, space.factor_dims)
    moved = np.tensordot(matrix, tensor_, axes=([1], [slot]))
    return np.moveaxis(moved, 0, slot).reshape(-1)


def apply_on_factor(
    unitary: UnitaryMatrix, state: StateVector, space: CompositeSpace, slot: int
) -> StateVector:
    """Apply *unitary* to one tensor factor and the identity elsewhere.

    Raises:
        DimensionError: if *slot* is out of range, the unitary does not
            match the factor, or the state does not match the space.

    Example:

        >>> space = CompositeSpace([2, 2])
        >>> flip = UnitaryMatrix([[0, 1], [1, 0]])
        >>> zero = StateVector.basis(2, 0)
        >>> out = apply_on_factor(flip, tensor(zero, zero), space, 0)
        >>> out.basis_index()
        2
    """
    space.check_state(state)
    space.check_slot(slot)
    if unitary.dim != space.factor_dims[slot]:
        raise DimensionError(
            f"{unitary.dim}-dim unitary on slot {slot} of dim {space.factor_dims[slot]}"
        )
    return StateVector(_apply_raw(unitary.entries, state.amplitudes, space, slot))


def _normalize_keep(space: CompositeSpace, keep: t.Iterable[int]) -> list[int]:
    kept = sorted(set(keep))
    if not kept:
        raise ArgumentError("must keep at least one factor")
    for slot in kept:
        space.check_slot(slot)
    return kept


def reduced_amplitudes(
    vector: np.ndarray, space: CompositeSpace, keep: t.Iterable[int]
) -> np.ndarray:
    """Reshape *vector* into a matrix with the kept factors as rows.

    The kept factors stay in ascending order. The result *A* satisfies
    ρ = A A† for the reduced density matrix ρ.
    """
    kept = _normalize_keep(space, keep)
    space.check_state(vector)
    rest = [slot for slot in range(len(space)) if slot not in kept]
    tensor_ = np.reshape(np.asarray(vector), space.factor_dims)
    tensor_ = np.transpose(tensor_, kept + rest)
    rows = int(np.prod([space.factor_dims[slot] for slot in kept]))
    return tensor_.reshape(rows, -1)


def partial_trace(
    state: StateVector, space: CompositeSpace, keep: t.Iterable[int]
) -> DensityMatrix:
    """Trace out all factors not in *keep*.

    Raises:
        ArgumentError: if *keep* is empty.
        DimensionError: if *keep* names a slot that doesn't exist.

    Example:

        >>> bell = StateVector.from_amplitudes([1, 0, 0, 1])
        >>> rho = partial_trace(bell, CompositeSpace([2, 2]), [0])
        >>> np.round(rho.entries.real, 3).tolist()
        [[0.5, 0.0], [0.0, 0.5]]
    """
    matrix = reduced_amplitudes(state.amplitudes, space, keep)
    rho = matrix @ matrix.conj().T
    # Remove rounding noise that would break exact hermiticity.
    return DensityMatrix(0.5 * (rho + rho.conj().T))


def purity(rho: DensityMatrix) -> float:
    """Return tr(ρ²), which lies in [1/dim, 1]."""
    return float(np.real(np.vdot(rho.entries, rho.entries)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Return −tr(ρ log₂ ρ) in bits."""
    eigenvalues = rho.eigenvalues()
    eigenvalues = eigenvalues[eigenvalues > 0.0]
    return float(max(0.0, -np.sum(eigenvalues * np.log2(eigenvalues))))


def entanglement_entropy(
    state: StateVector, space: CompositeSpace, bipartition: t.Iterable[int]
) -> float:
    """Return the entanglement entropy (in bits) across a bipartition.

    Args:
        state: A pure state in *space*.
        space: The factorization of the state.
        bipartition: The factors on one side of the cut. The other side
            consists of all remaining factors.

    Raises:
        ArgumentError: if *bipartition* is empty or contains all
            factors.

    The entropy is computed from the Schmidt coefficients, i.e. the
    singular values of the reshaped amplitudes. Entropies below
    `Tolerances.entropy` are rounded to zero.
    """
    kept = _normalize_keep(space, bipartition)
    if len(kept) == len(space):
        raise ArgumentError(
            "bipartition must leave at least one factor on each side"
        )
    matrix = reduced_amplitudes(state.amplitudes, space, kept)
    schmidt = np.linalg.svd(matrix, compute_uv=False) ** 2
    schmidt = schmidt[schmidt > 0.0]
    entropy = float(max(0.0, -np.sum(schmidt * np.log2(schmidt))))
    return 0.0 if entropy < get_current_tolerances().entropy else entropy


def random_state(dim: int, seed: Seed = None) -> StateVector:
    """Draw a state uniformly from the unit sphere in ℂ^dim.

    The same integer seed always gives the same state:

        >>> random_state(3, seed=7) == random_state(3, seed=7)
        True
    """
    if dim < 1:
        raise ArgumentError(f"dimension must be positive: {dim}")
    rng = np.random.default_rng(seed)
    vector = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector(vector / np.linalg.norm(vector))


def random_unitary(dim: int, seed: Seed = None) -> UnitaryMatrix:
    """Draw a Haar-distributed unitary matrix.

    This QR-decomposes a matrix of i.i.d. complex Gaussians and fixes
    the phases so that the diagonal of *R* is real and positive.
    """
    if dim < 1:
        raise ArgumentError(f"dimension must be positive: {dim}")
    rng = np.random.default_rng(seed)
    shape = (dim, dim)
    real, imag = rng.standard_normal(shape), rng.standard_normal(shape)
    ginibre = (real + 1j * imag) / np.sqrt(2)
    q, r = qr(ginibre)
    diagonal = np.diag(r)
    phases = diagonal / np.abs(diagonal)
    return UnitaryMatrix(q * phases)
