# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Deleting one of two replicas by a linear map."""

from __future__ import annotations

import dataclasses
import itertools
import logging
import typing as t

import numpy as np

from qspecies.hilbert import (
    ArgumentError,
    CapacityError,
    CompositeSpace,
    DimensionError,
    LinearExtensionMap,
    StateVector,
    inner_product,
    tensor,
)

__all__ = (
    "BasisCuller",
    "CullGapReport",
    "cull_gap",
    "make_basis_culler",
)

LOG = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class BasisCuller:
    """A machine that deletes the second replica of a basis state.

    Don't instantiate this directly, use `make_basis_culler()`.

    Input and output both live in organism ⊗ replica ⊗ ancilla. The
    machine maps |k⟩|k⟩|r⟩ to |k⟩|w_k⟩|0⟩ and each |k⟩|l⟩|r⟩ with
    k ≠ l to a separate state |Φ_kl⟩ orthogonal to all of these.

    Attributes:
        dim: Dimension of the organism.
        ancilla: The ancilla state |r⟩.
        blank_states: The states |w_k⟩ left in place of the replica.
        diagonal_targets: The images |k⟩|w_k⟩|0⟩ of |k⟩|k⟩|r⟩.
        offdiag_pairs: The pairs (k, l) with k ≠ l, in lexicographic
            order.
        offdiag_targets: The images |Φ_kl⟩ in the same order.
        space: The factorization organism ⊗ replica ⊗ ancilla.
        extension: The linear extension of the map above.
    """

    dim: int
    ancilla: StateVector
    blank_states: tuple[StateVector, ...]
    diagonal_targets: tuple[StateVector, ...] = dataclasses.field(repr=False)
    offdiag_pairs: tuple[tuple[int, int], ...] = dataclasses.field(repr=False)
    offdiag_targets: tuple[StateVector, ...] = dataclasses.field(repr=False)
    space: CompositeSpace
    extension: LinearExtensionMap = dataclasses.field(repr=False)

    @property
    def reference(self) -> StateVector:
        """The state |0⟩ that pads the ancilla factor of each output."""
        return StateVector.basis(self.space.factor_dims[2], 0)

    def input_state(self, psi: StateVector) -> StateVector:
        """Return |ψ⟩|ψ⟩|r⟩.

        Raises:
            DimensionError: if *psi* doesn't have dimension `dim`.
        """
        if psi.dim != self.dim:
            raise DimensionError(
                f"culler for dim {self.dim} got state of dim {psi.dim}"
            )
        return tensor(tensor(psi, psi), self.ancilla)

    def apply(self, psi: StateVector) -> StateVector:
        """Feed |ψ⟩|ψ⟩|r⟩ into the machine and return its output."""
        return self.extension.apply_state(self.input_state(psi))


def _default_offdiag_targets(dim: int, ancilla_dim: int) -> list[StateVector]:
    pairs = [(k, l) for k, l in itertools.product(range(dim), repeat=2) if k != l]
    if dim > 1 and ancilla_dim < 2:
        raise CapacityError(
            f"a {ancilla_dim}-dim ancilla leaves no room for off-diagonal targets; "
            "pass them explicitly or use an ancilla of dim 2 or more"
        )
    return [
        tensor(
            tensor(StateVector.basis(dim, k), StateVector.basis(dim, l)),
            StateVector.basis(ancilla_dim, 1),
        )
        for k, l in pairs
    ]


def make_basis_culler(
    dim: int,
    ancilla: StateVector,
    blank_states: t.Sequence[StateVector],
    offdiag_targets: t.Sequence[StateVector] | None = None,
) -> BasisCuller:
    """Create a culler that works perfectly on basis states.

    Args:
        dim: Dimension *N* of the organism.
        ancilla: The ancilla |r⟩. Its dimension *A* is arbitrary.
        blank_states: *N* states |w_k⟩ of dimension *N*.
        offdiag_targets: The images |Φ_kl⟩ for k ≠ l in lexicographic
            order of (k, l). By default, they are |k⟩|l⟩|1⟩, which needs
            an ancilla of dimension 2 or more.

    Raises:
        ArgumentError: if the number of blank states or off-diagonal
            targets is wrong.
        DimensionError: if a state has the wrong dimension.
        CapacityError: if the space is too large, or if the default
            off-diagonal targets are requested with a 1-dim ancilla.
        IsometryError: if the targets are not orthonormal.

    Example:

        >>> zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        >>> culler = make_basis_culler(2, zero, [zero, zero])
        >>> out = culler.apply(one)
        >>> out == tensor(tensor(one, zero), zero)
        True
    """
    if dim < 1:
        raise ArgumentError(f"dimension must be positive: {dim}")
    blanks = tuple(blank_states)
    if len(blanks) != dim:
        raise ArgumentError(f"need {dim} blank states, got {len(blanks)}")
    for blank in blanks:
        if blank.dim != dim:
            raise DimensionError(f"blank states must have dim {dim}, got {blank.dim}")
    space = CompositeSpace([dim, dim, ancilla.dim])
    reference = StateVector.basis(ancilla.dim, 0)
    basis = [StateVector.basis(dim, k) for k in range(dim)]
    diagonal = [
        tensor(tensor(ket, blank), reference) for ket, blank in zip(basis, blanks)
    ]
    pairs = tuple((k, l) for k, l in itertools.product(range(dim), repeat=2) if k != l)
    if offdiag_targets is None:
        offdiag = _default_offdiag_targets(dim, ancilla.dim)
    else:
        offdiag = list(offdiag_targets)
        if len(offdiag) != len(pairs):
            raise ArgumentError(
                f"need {len(pairs)} off-diagonal targets, got {len(offdiag)}"
            )
        for target in offdiag:
            space.check_state(target)
    domain = [tensor(tensor(basis[k], basis[k]), ancilla) for k in range(dim)]
    domain += [tensor(tensor(basis[k], basis[l]), ancilla) for k, l in pairs]
    LOG.debug("culler on %r with %d off-diagonal targets", space, len(pairs))
    return BasisCuller(
        dim=dim,
        ancilla=ancilla,
        blank_states=blanks,
        diagonal_targets=tuple(diagonal),
        offdiag_pairs=pairs,
        offdiag_targets=tuple(offdiag),
        space=space,
        extension=LinearExtensionMap(domain, diagonal + offdiag),
    )


@dataclasses.dataclass(frozen=True)
class CullGapReport:
    """How far the culler's output is from the ideal |ψ⟩|w⟩.

    Attributes:
        fidelity_vs_ideal: |⟨ψ w 0|out⟩|².
        diagonal_weight: Σ_k |ψ_k|⁴, the weight of the branches that
            were culled as intended.
        offdiag_weight: The weight of the |Φ_kl⟩ branches.
        recovery_residual: Distance between the input and the result of
            undoing the culler on its output. The information that
            was "deleted" has only been moved elsewhere, so this is
            zero up to rounding.
    """

    fidelity_vs_ideal: float
    diagonal_weight: float
    offdiag_weight: float
    recovery_residual: float


def cull_gap(
    culler: BasisCuller, psi: StateVector, ideal_blank: StateVector | None = None
) -> CullGapReport:
    """Compare the culler's output with the ideal |ψ⟩|w⟩|0⟩.

    Args:
        culler: The machine to run.
        psi: The organism state, of which the input holds two replicas.
        ideal_blank: The blank state *w* of the ideal output. The
            default is |w_0⟩.

    Raises:
        DimensionError: if *psi* or *ideal_blank* has the wrong
            dimension.

    Example:

        >>> zero = StateVector.basis(2, 0)
        >>> culler = make_basis_culler(2, zero, [zero, zero])
        >>> report = cull_gap(culler, StateVector.from_amplitudes([1, 1]))
        >>> round(report.fidelity_vs_ideal, 10), round(report.diagonal_weight, 10)
        (0.5, 0.5)
    """
    if ideal_blank is None:
        ideal_blank = culler.blank_states[0]
    if ideal_blank.dim != culler.dim:
        raise DimensionError(
            f"ideal blank state must have dim {culler.dim}, got {ideal_blank.dim}"
        )
    source = culler.input_state(psi)
    actual = culler.extension.apply_state(source)
    ideal = tensor(tensor(psi, ideal_blank), culler.reference)
    probabilities = np.abs(psi.amplitudes) ** 2
    diagonal_weight = float(np.sum(probabilities**2))
    offdiag_weight = float(np.sum(probabilities) ** 2 - diagonal_weight)
    recovered = culler.extension.inverse_apply(actual)
    return CullGapReport(
        fidelity_vs_ideal=min(1.0, abs(inner_product(ideal, actual)) ** 2),
        diagonal_weight=diagonal_weight,
        offdiag_weight=max(0.0, offdiag_weight),
        recovery_residual=float(np.linalg.norm(recovered - source.amplitudes)),
    )
