# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Cloning with the help of an ancilla that already carries the copy.

A family {ψ_k} without orthogonal pairs can be cloned unitarily with the
help of pure ancillas {a_k}, i.e. |ψ_k⟩|a_k⟩ → |ψ_k⟩|ψ_k⟩, if and only
if the ancillas alone can be mapped unitarily onto the states,
|a_k⟩ → |ψ_k⟩. Both conditions say that the two families have the same
Gram matrix. In other words, the ancilla must already hold the full
information of the copy.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import typing as t

import numpy as np

from qspecies.hilbert import (
    ArgumentError,
    CompositeSpace,
    DimensionError,
    QSpeciesError,
    StateVector,
    UnitaryMatrix,
    apply_on_factor,
    get_current_tolerances,
    gram_matrix,
    tensor,
    unitary_from_pairs,
)

__all__ = (
    "DomainError",
    "GramFeasibility",
    "ORTHOGONALITY_THRESHOLD",
    "jozsa_clonability_check",
)

LOG = logging.getLogger(__name__)

ORTHOGONALITY_THRESHOLD = 1e-9
"""Overlaps at or below this magnitude count as orthogonal."""


class DomainError(QSpeciesError, ValueError):
    """The input lies outside the hypothesis of a theorem.

    Raised when a state family contains an orthogonal pair, which the
    ancilla-assisted cloning criterion excludes.
    """


@dataclasses.dataclass(frozen=True)
class GramFeasibility:
    """Result of `jozsa_clonability_check()`.

    Attributes:
        states: The family {ψ_k} to be cloned.
        ancillas: The ancillas {a_k}, one per state.
        feasible: True if the Gram matrices agree within
            `Tolerances.gram`.
        max_residual: The largest entry of *residuals*.
        residuals: The matrix |⟨a_k|a_l⟩ − ⟨ψ_k|ψ_l⟩|.
        transport: If feasible, a unitary with W|a_k⟩ = |ψ_k⟩.
        construction_residual: If feasible, the largest distance between
            (I⊗W)|ψ_k⟩|a_k⟩ and |ψ_k⟩|ψ_k⟩.
    """

    states: tuple[StateVector, ...]
    ancillas: tuple[StateVector, ...]
    feasible: bool
    max_residual: float
    residuals: np.ndarray = dataclasses.field(repr=False)
    transport: UnitaryMatrix | None = dataclasses.field(default=None, repr=False)
    construction_residual: float | None = None


def jozsa_clonability_check(
    states: t.Sequence[StateVector], ancillas: t.Sequence[StateVector]
) -> GramFeasibility:
    """Decide whether ancilla-assisted unitary cloning is possible.

    If it is, the cloning unitary is constructed explicitly: it applies
    the transport |a_k⟩ → |ψ_k⟩ to the ancilla slot and leaves the
    original alone.

    Raises:
        ArgumentError: if there are fewer than two states or a different
            number of ancillas.
        DimensionError: if the states and ancillas don't all have the
            same dimension.
        DomainError: if two states are orthogonal.

    Example:

        >>> a = StateVector([0.6, 0.8])
        >>> b = StateVector([0.8, 0.6])
        >>> jozsa_clonability_check([a, b], [a, b]).feasible
        True
        >>> fixed = StateVector.basis(2, 0)
        >>> jozsa_clonability_check([a, b], [fixed, fixed]).feasible
        False
    """
    states = tuple(states)
    ancillas = tuple(ancillas)
    if len(states) < 2:
        raise ArgumentError(f"need at least two states, got {len(states)}")
    if len(ancillas) != len(states):
        raise ArgumentError(f"got {len(states)} states but {len(ancillas)} ancillas")
    dims = {state.dim for state in states + ancillas}
    if len(dims) != 1:
        raise DimensionError(f"states and ancillas of different dims: {sorted(dims)}")
    (dim,) = dims
    state_gram = gram_matrix(states)
    for k, l in itertools.combinations(range(len(states)), 2):
        if abs(state_gram[k, l]) <= ORTHOGONALITY_THRESHOLD:
            raise DomainError(
                f"states {k} and {l} are orthogonal, but the criterion "
                f"only holds for families without orthogonal pairs"
            )
    residuals = np.abs(gram_matrix(ancillas) - state_gram)
    max_residual = float(np.max(residuals))
    feasible = max_residual <= get_current_tolerances().gram
    LOG.debug("Gram residual %.3g, feasible: %s", max_residual, feasible)
    if not feasible:
        return GramFeasibility(states, ancillas, False, max_residual, residuals)
    transport = unitary_from_pairs(ancillas, states)
    space = CompositeSpace([dim, dim])
    construction_residual = 0.0
    for psi, ancilla in zip(states, ancillas):
        cloned = apply_on_factor(transport, tensor(psi, ancilla), space, 1)
        target = tensor(psi, psi)
        distance = float(np.linalg.norm(cloned.amplitudes - target.amplitudes))
        construction_residual = max(construction_residual, distance)
    return GramFeasibility(
        states,
        ancillas,
        True,
        max_residual,
        residuals,
        transport=transport,
        construction_residual=construction_residual,
    )
