# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Periodic evolutions that return to a copyable state."""

from __future__ import annotations

import dataclasses
import logging

import numpy as np
from scipy.linalg import expm

from qspecies.hilbert import (
    ArgumentError,
    DimensionError,
    StateVector,
    UnitaryMatrix,
    get_current_tolerances,
)

from ._cloner import BasisCloner, clone_gap

__all__ = (
    "CyclicPoint",
    "cyclic_replication_demo",
    "periodic_unitary",
    "periodicity_residual",
)

LOG = logging.getLogger(__name__)


def _default_rotation(dim: int) -> UnitaryMatrix:
    generator = np.zeros((dim, dim))
    for k in range(dim - 1):
        generator[k, k + 1] = 1.0
        generator[k + 1, k] = -1.0
    return UnitaryMatrix(expm(np.pi / 8 * generator))


def periodic_unitary(
    dim: int, period: int, rotation: UnitaryMatrix | None = None
) -> UnitaryMatrix:
    """Build a step unitary U with U^period = I.

    The eigenphases of U are 2πk/period for k = 0, …, dim−1. Its
    eigenbasis is the image of the computational basis under *rotation*.
    The default rotation mixes neighboring basis states, so that a basis
    state turns into a proper superposition after one step.

    Raises:
        ArgumentError: if *period* is less than one.
        DimensionError: if *rotation* has the wrong dimension.

    Example:

        >>> u = periodic_unitary(2, 4)
        >>> np.allclose(u.power(4).entries, np.eye(2))
        True
        >>> u.apply(StateVector.basis(2, 0)).basis_index() is None
        True
    """
    if period < 1:
        raise ArgumentError(f"period must be positive: {period}")
    if rotation is None:
        rotation = _default_rotation(dim)
    if rotation.dim != dim:
        raise DimensionError(f"rotation of dim {rotation.dim} for dim {dim}")
    phases = np.exp(2j * np.pi * np.arange(dim) / period)
    basis = rotation.entries
    return UnitaryMatrix(basis @ np.diag(phases) @ basis.conj().T)


def periodicity_residual(step: UnitaryMatrix, period: int) -> float:
    """Return how far U^period is from a multiple of the identity.

    A global phase is physically irrelevant, so U^period = e^{iα} I
    counts as periodic.
    """
    if period < 1:
        raise ArgumentError(f"period must be positive: {period}")
    full = step.power(period).entries
    phase = np.trace(full) / step.dim
    phase /= abs(phase) if abs(phase) > 0.0 else 1.0
    return float(np.max(np.abs(full - phase * np.eye(step.dim))))


@dataclasses.dataclass(frozen=True)
class CyclicPoint:
    """One time step of `cyclic_replication_demo()`.

    Attributes:
        t: Number of steps taken.
        fidelity: Clone fidelity against the default ideal state.
        fidelity_best_rejected: Clone fidelity maximized over the
            rejected state.
    """

    t: int
    fidelity: float
    fidelity_best_rejected: float


def cyclic_replication_demo(
    step: UnitaryMatrix,
    period: int,
    psi0: StateVector,
    cloner: BasisCloner,
    steps: int,
) -> list[CyclicPoint]:
    """Evolve a basis state periodically and try to clone it each step.

    Whenever ``t`` is a multiple of *period*, the state is a basis state
    again and the clone is perfect. In between, it generally is a
    superposition and cloning fails.

    Raises:
        ArgumentError: if *step* is not periodic with the given period
            within `Tolerances.periodicity`, *psi0* is not a basis state,
            or *steps* is negative.
        DimensionError: if the dimensions of *step*, *psi0* and *cloner*
            don't agree.

    Example:

        >>> from qspecies.hilbert import HADAMARD
        >>> from qspecies.replication import make_basis_cloner
        >>> r = StateVector.basis(1, 0)
        >>> cloner = make_basis_cloner(2, StateVector.basis(2, 0), [r, r])
        >>> zero = StateVector.basis(2, 0)
        >>> series = cyclic_replication_demo(HADAMARD, 2, zero, cloner, 3)
        >>> [round(point.fidelity, 10) for point in series]
        [1.0, 0.5, 1.0, 0.5]
    """
    if steps < 0:
        raise ArgumentError(f"number of steps must not be negative: {steps}")
    if not step.dim == psi0.dim == cloner.dim:
        raise DimensionError(
            f"step of dim {step.dim}, state of dim {psi0.dim}, "
            f"cloner of dim {cloner.dim}"
        )
    residual = periodicity_residual(step, period)
    if residual > get_current_tolerances().periodicity:
        raise ArgumentError(
            f"step unitary is not periodic with period {period}: "
            f"residual {residual:.3g}"
        )
    if psi0.basis_index() is None:
        raise ArgumentError("initial state must be a basis state")
    series = []
    state = psi0
    for t in range(steps + 1):
        report = clone_gap(cloner, state)
        series.append(
            CyclicPoint(
                t, report.fidelity_actual_vs_ideal, report.fidelity_best_rejected
            )
        )
        state = step.apply(state)
    LOG.debug("cyclic fidelities: %s", [point.fidelity for point in series])
    return series
