# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Deterministic cloning of basis states and why it fails elsewhere."""

from __future__ import annotations

import dataclasses
import typing as t

import numpy as np

from qspecies.hilbert import (
    ArgumentError,
    CompositeSpace,
    DimensionError,
    LinearExtensionMap,
    StateVector,
    entanglement_entropy,
    inner_product,
    partial_trace,
    purity,
    tensor,
)

__all__ = (
    "BasisCloner",
    "CloneGapReport",
    "clone_gap",
    "make_basis_cloner",
    "nonorthogonal_unitarity_violation",
    "required_rejected_overlap",
)


@dataclasses.dataclass(frozen=True)
class BasisCloner:
    """A machine that copies the computational basis of an organism.

    Don't instantiate this directly, use `make_basis_cloner()`.

    The machine acts on organism ⊗ nutrient, where the nutrient has
    dimension ``dim * R``. Its output lives in the three factors
    organism ⊗ copy ⊗ rejected with dimensions ``(dim, dim, R)``.

    Attributes:
        dim: Dimension of the organism.
        nutrient: The state |w⟩ the copy is written onto.
        rejected_states: One rejected state |r_k⟩ per basis state.
        space: The output factorization organism ⊗ copy ⊗ rejected.
        extension: The linear map |k⟩|w⟩ → |k⟩|k⟩|r_k⟩.
    """

    dim: int
    nutrient: StateVector
    rejected_states: tuple[StateVector, ...]
    space: CompositeSpace
    extension: LinearExtensionMap = dataclasses.field(repr=False)

    @property
    def rejected_dim(self) -> int:
        """Dimension of the rejected factor."""
        return self.space.factor_dims[2]

    def apply(self, psi: StateVector) -> StateVector:
        """Feed |psi⟩|w⟩ into the machine and return its output.

        Raises:
            DimensionError: if *psi* doesn't have dimension `dim`.
        """
        if psi.dim != self.dim:
            raise DimensionError(
                f"cloner for dim {self.dim} got state of dim {psi.dim}"
            )
        return self.extension.apply_state(tensor(psi, self.nutrient))


def make_basis_cloner(
    dim: int, nutrient: StateVector, rejected_states: t.Sequence[StateVector]
) -> BasisCloner:
    """Create the cloner that copies each basis state |k⟩ perfectly.

    The cloner is the linear extension of |k⟩|w⟩ → |k⟩|k⟩|r_k⟩.

    Args:
        dim: Dimension *N* of the organism.
        nutrient: The state |w⟩. Its dimension must be *N* times the
            dimension *R* of the rejected states.
        rejected_states: *N* states |r_k⟩ of common dimension *R*.

    Raises:
        ArgumentError: if there are not exactly *dim* rejected states.
        DimensionError: if the dimensions don't fit together.
        CapacityError: if the space is too large.
        IsometryError: if the images are not orthonormal.

    Example:

        >>> w = StateVector.basis(2, 0)
        >>> r = StateVector.basis(1, 0)
        >>> cloner = make_basis_cloner(2, w, [r, r])
        >>> one = StateVector.basis(2, 1)
        >>> cloner.apply(one) == tensor(tensor(one, one), r)
        True
    """
    if dim < 1:
        raise ArgumentError(f"dimension must be positive: {dim}")
    rejected = tuple(rejected_states)
    if len(rejected) != dim:
        raise ArgumentError(f"need {dim} rejected states, got {len(rejected)}")
    rejected_dims = {state.dim for state in rejected}
    if len(rejected_dims) != 1:
        raise DimensionError(
            f"rejected states of different dims: {sorted(rejected_dims)}"
        )
    (rejected_dim,) = rejected_dims
    if nutrient.dim != dim * rejected_dim:
        raise DimensionError(
            f"nutrient must have dim {dim}×{rejected_dim}, got {nutrient.dim}"
        )
    space = CompositeSpace([dim, dim, rejected_dim])
    basis = [StateVector.basis(dim, k) for k in range(dim)]
    domain = [tensor(ket, nutrient) for ket in basis]
    images = [
        tensor(tensor(ket, ket), state) for ket, state in zip(basis, rejected)
    ]
    return BasisCloner(
        dim=dim,
        nutrient=nutrient,
        rejected_states=rejected,
        space=space,
        extension=LinearExtensionMap(domain, images),
    )


@dataclasses.dataclass(frozen=True)
class CloneGapReport:
    """How far the cloner's output is from a true copy.

    Attributes:
        fidelity_actual_vs_ideal: |⟨ψψr|out⟩|² for the chosen ideal
            rejected state *r*.
        reduced_purity: Purity of the organism after tracing out copy
            and rejected factors. Less than one means the organism got
            entangled with its would-be copy.
        entropy_across_clone_cut: Entanglement entropy in bits between
            the organism and the rest.
        fidelity_best_rejected: The fidelity maximized over all
            rejected states *r*.
    """

    fidelity_actual_vs_ideal: float
    reduced_purity: float
    entropy_across_clone_cut: float
    fidelity_best_rejected: float


def clone_gap(
    cloner: BasisCloner,
    psi: StateVector,
    ideal_rejected: StateVector | None = None,
) -> CloneGapReport:
    """Compare the cloner's actual output with the ideal |ψ⟩|ψ⟩|r⟩.

    Args:
        cloner: The machine to run.
        psi: The organism state to copy.
        ideal_rejected: The rejected state *r* of the ideal output. The
            default is the rejected state paired with |0⟩.

    Raises:
        DimensionError: if *psi* or *ideal_rejected* has the wrong
            dimension.

    Example:

        >>> w, r = StateVector.basis(2, 0), StateVector.basis(1, 0)
        >>> cloner = make_basis_cloner(2, w, [r, r])
        >>> report = clone_gap(cloner, StateVector.from_amplitudes([1, 1]))
        >>> round(report.fidelity_actual_vs_ideal, 10)
        0.5
        >>> round(report.entropy_across_clone_cut, 8)
        1.0
    """
    if ideal_rejected is None:
        ideal_rejected = cloner.rejected_states[0]
    if ideal_rejected.dim != cloner.rejected_dim:
        raise DimensionError(
            f"ideal rejected state must have dim {cloner.rejected_dim}, "
            f"got {ideal_rejected.dim}"
        )
    actual = cloner.apply(psi)
    ideal = tensor(tensor(psi, psi), ideal_rejected)
    fidelity = abs(inner_product(ideal, actual)) ** 2
    # The overlap with |ψψr⟩ is ⟨r|v⟩ for the vector below, so the best
    # r is v/|v|.
    weights = np.conj(psi.amplitudes) ** 2 * psi.amplitudes
    rejected = np.stack([state.amplitudes for state in cloner.rejected_states])
    best = weights @ rejected
    return CloneGapReport(
        fidelity_actual_vs_ideal=min(1.0, fidelity),
        reduced_purity=purity(partial_trace(actual, cloner.space, [0])),
        entropy_across_clone_cut=entanglement_entropy(actual, cloner.space, [0]),
        fidelity_best_rejected=min(1.0, float(np.vdot(best, best).real)),
    )


def nonorthogonal_unitarity_violation(psi1: StateVector, psi2: StateVector) -> float:
    """Return |s| − |s|² for the overlap s = ⟨ψ₁|ψ₂⟩.

    A unitary cloner preserves inner products, so it would need
    s = s² ⟨r₁|r₂⟩. Since |⟨r₁|r₂⟩| ≤ 1, that forces |s| ≤ |s|². A
    positive result certifies that no cloner handles both states. The
    result is zero for orthogonal and for identical states.

    Raises:
        DimensionError: if the states have different dimensions.

    Example:

        >>> zero = StateVector.basis(2, 0)
        >>> nonorthogonal_unitarity_violation(zero, StateVector([0.5, 0.75**0.5]))
        0.25
    """
    overlap = abs(inner_product(psi1, psi2))
    return max(0.0, overlap - overlap**2)


def required_rejected_overlap(psi1: StateVector, psi2: StateVector) -> complex:
    """Return the ⟨r₁|r₂⟩ that a unitary cloner would need.

    This is 1/s for s = ⟨ψ₁|ψ₂⟩. Its magnitude exceeds one for every
    non-orthogonal pair of distinct states.

    Raises:
        ArgumentError: if the states are orthogonal, in which case any
            rejected states work.
        DimensionError: if the states have different dimensions.
    """
    overlap = inner_product(psi1, psi2)
    if overlap == 0.0:
        raise ArgumentError("states are orthogonal, the rejected states are free")
    return 1.0 / overlap
