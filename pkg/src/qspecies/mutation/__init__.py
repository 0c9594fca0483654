# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Mutation of one copy among many, and the paradox it implies.

Take *M* copies of a species |ψ⟩ and let one of them mutate, |ψ⟩ → U|ψ⟩.
If it is unknown *which* copy mutated, the symmetric superposition

    N (U|ψ⟩|ψ⟩…|ψ⟩ + |ψ⟩U|ψ⟩…|ψ⟩ + … + |ψ⟩|ψ⟩…U|ψ⟩)

describes the result. Its overlap with the unmutated |ψ⟩^⊗M is

    M s² / (1 + (M−1) s²)    with s² = |⟨ψ|U|ψ⟩|²,

which tends to 1 for large *M*: the more copies, the less the mutation
seems to have happened. The resolution is that no unitary produces this
entangled state from the product state for more than one species, which
`entangling_unitarity_residual()` quantifies.
"""

from __future__ import annotations

import dataclasses
import logging
import typing as t
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from qspecies.hilbert import (
    ArgumentError,
    CompositeSpace,
    DimensionError,
    StateVector,
    UnitaryMatrix,
    apply_on_factor,
    check_capacity,
    get_current_tolerances,
    inner_product,
    qubit_unitary,
    tensor,
    tensor_power,
)

__all__ = (
    "MAX_COPIES",
    "EntanglingResidual",
    "MutationReport",
    "canonical_mutation",
    "entangled_mutation_state",
    "entangled_overlap",
    "entangling_unitarity_residual",
    "mutation_normalization",
    "mutation_report",
    "overlap_entangled_closed_form",
    "overlap_entangled_tensor",
    "overlap_unentangled",
    "paradox_sweep",
    "qubit_orthogonal_example",
)

LOG = logging.getLogger(__name__)

MAX_COPIES = 2**31 - 1
"""The largest number of copies accepted by the closed forms."""


def _check_copies(copies: int) -> int:
    if not 1 <= copies <= MAX_COPIES:
        raise ArgumentError(f"number of copies must be in [1, {MAX_COPIES}]: {copies}")
    return int(copies)


def _check_overlap(s2: float) -> float:
    if not 0.0 <= s2 <= 1.0:
        raise ArgumentError(f"squared overlap must be in [0, 1]: {s2!r}")
    return float(s2)


def _check_dims(psi: StateVector, unitary: UnitaryMatrix) -> None:
    if psi.dim != unitary.dim:
        raise DimensionError(f"{unitary.dim}-dim unitary on {psi.dim}-dim state")


def overlap_unentangled(psi: StateVector, unitary: UnitaryMatrix) -> float:
    """Return |⟨ψ|U|ψ⟩|².

    This is the overlap between |ψ⟩^⊗M and the same state with one known
    copy mutated. It neither depends on *M* nor on the copy.

    Example:

        >>> from qspecies.hilbert import PAULI_X, PAULI_Z
        >>> overlap_unentangled(StateVector.basis(2, 0), PAULI_X)
        0.0
        >>> round(overlap_unentangled(StateVector.from_amplitudes([1, 1]), PAULI_Z), 12)
        0.0
    """
    _check_dims(psi, unitary)
    return min(1.0, abs(unitary.expectation(psi)) ** 2)


def mutation_normalization(s2: float, copies: int) -> float:
    """Return 1/√(M + M(M−1) s²), the normalization of the entangled state."""
    s2 = _check_overlap(s2)
    copies = _check_copies(copies)
    return 1.0 / np.sqrt(copies + copies * (copies - 1) * s2)


def entangled_overlap(s2: float, copies: int) -> float:
    """Return M s² / (1 + (M−1) s²).

    Raises:
        ArgumentError: if *s2* is not in [0, 1] or *copies* is not in
            [1, `MAX_COPIES`].

    Example:

        >>> entangled_overlap(0.5, 3)
        0.75
        >>> entangled_overlap(0.0, 1000)
        0.0
    """
    s2 = _check_overlap(s2)
    copies = _check_copies(copies)
    return copies * s2 / (1.0 + (copies - 1) * s2)


def overlap_entangled_closed_form(
    psi: StateVector, unitary: UnitaryMatrix, copies: int
) -> float:
    """Evaluate `entangled_overlap()` for s² = |⟨ψ|U|ψ⟩|²."""
    return entangled_overlap(overlap_unentangled(psi, unitary), copies)


def entangled_mutation_state(
    psi: StateVector, unitary: UnitaryMatrix, copies: int
) -> StateVector:
    """Build the symmetric superposition of one mutated copy among *M*.

    For ``copies=1``, this is simply U|ψ⟩.

    Raises:
        ArgumentError: if *copies* is less than one.
        CapacityError: if dim^M exceeds `Tolerances.max_total_dim`.
        DimensionError: if *psi* and *unitary* don't match.

    Example:

        >>> from qspecies.hilbert import PAULI_X
        >>> state = entangled_mutation_state(StateVector.basis(2, 0), PAULI_X, 2)
        >>> np.round(state.amplitudes.real, 6).tolist()
        [0.0, 0.707107, 0.707107, 0.0]
    """
    _check_dims(psi, unitary)
    if copies < 1:
        raise ArgumentError(f"need at least one copy, got {copies}")
    check_capacity(psi.dim**copies, f"{copies} copies of a {psi.dim}-dim state")
    space = CompositeSpace([psi.dim] * copies)
    product = tensor_power(psi, copies)
    total = np.zeros(space.total_dim, dtype=complex)
    for slot in range(copies):
        total += apply_on_factor(unitary, product, space, slot).amplitudes
    s2 = overlap_unentangled(psi, unitary)
    return StateVector(mutation_normalization(s2, copies) * total)


def overlap_entangled_tensor(
    psi: StateVector, unitary: UnitaryMatrix, copies: int
) -> float:
    """Compute the overlap of `entangled_mutation_state()` by brute force.

    This is |⟨ψ^⊗M|entangled⟩|² evaluated on the full tensor product.
    It serves as an oracle for `overlap_entangled_closed_form()`.
    """
    entangled = entangled_mutation_state(psi, unitary, copies)
    product = tensor_power(psi, copies)
    return min(1.0, abs(inner_product(product, entangled)) ** 2)


@dataclasses.dataclass(frozen=True)
class MutationReport:
    """Overlaps for one number of copies.

    Attributes:
        copies: The number of copies *M*.
        s2: |⟨ψ|U|ψ⟩|².
        overlap_entangled: Overlap of the entangled state with the
            unmutated one.
        overlap_unentangled: Overlap if the mutated copy were known.
            Equal to *s2*.
        normalization: The normalization of the entangled state.
        ratio: M/(1+(M−1)s²). This equals *overlap_entangled* divided by
            *overlap_unentangled* whenever the latter is nonzero.
        oracle_overlap: The brute-force overlap, if it was requested and
            fits into memory.
    """

    copies: int
    s2: float
    overlap_entangled: float
    overlap_unentangled: float
    normalization: float
    ratio: float
    oracle_overlap: float | None = None


def mutation_report(
    psi: StateVector, unitary: UnitaryMatrix, copies: int, *, oracle: bool = False
) -> MutationReport:
    """Evaluate all overlaps for one number of copies.

    If *oracle* is passed and dim^M fits into `Tolerances.max_total_dim`,
    the brute-force overlap is computed as well.
    """
    s2 = overlap_unentangled(psi, unitary)
    copies = _check_copies(copies)
    oracle_overlap = None
    if oracle and psi.dim**copies <= get_current_tolerances().max_total_dim:
        oracle_overlap = overlap_entangled_tensor(psi, unitary, copies)
    return MutationReport(
        copies=copies,
        s2=s2,
        overlap_entangled=entangled_overlap(s2, copies),
        overlap_unentangled=s2,
        normalization=mutation_normalization(s2, copies),
        ratio=copies / (1.0 + (copies - 1) * s2),
        oracle_overlap=oracle_overlap,
    )


def paradox_sweep(
    psi: StateVector,
    unitary: UnitaryMatrix,
    copies: t.Sequence[int],
    *,
    oracle: bool = False,
    max_workers: int | None = None,
) -> list[MutationReport]:
    """Evaluate `mutation_report()` for several numbers of copies.

    The points are evaluated concurrently on a thread pool with
    *max_workers* threads. The result is ordered like *copies*
    regardless.

    Raises:
        ArgumentError: if *copies* is not sorted ascending or contains a
            number less than one.

    Example:

        >>> psi, u = canonical_mutation(0.5)
        >>> [round(r.overlap_entangled, 4) for r in paradox_sweep(psi, u, [1, 2, 4, 8])]
        [0.5, 0.6667, 0.8, 0.8889]
    """
    values = [int(value) for value in copies]
    if any(value < 1 for value in values):
        raise ArgumentError(f"numbers of copies must be positive: {values}")
    if values != sorted(values):
        raise ArgumentError(f"numbers of copies must be sorted: {values}")
    LOG.debug("sweeping %d points on %s workers", len(values), max_workers or "default")
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(
            executor.map(
                lambda value: mutation_report(psi, unitary, value, oracle=oracle),
                values,
            )
        )


def canonical_mutation(s2: float) -> tuple[StateVector, UnitaryMatrix]:
    """Return |0⟩ and a real rotation U with |⟨0|U|0⟩|² = *s2*.

    Example:

        >>> psi, u = canonical_mutation(0.25)
        >>> round(overlap_unentangled(psi, u), 12)
        0.25
    """
    s2 = _check_overlap(s2)
    return StateVector.basis(2, 0), qubit_unitary(np.sqrt(s2), np.sqrt(1.0 - s2))


@dataclasses.dataclass(frozen=True)
class EntanglingResidual:
    """Both sides of the unitarity condition for entangling a mutation.

    A unitary that maps |ψ⟩|ψ⟩ to the entangled two-copy state of |ψ⟩,
    and likewise for |φ⟩, must preserve the inner product:

        ⟨ψ|φ⟩² = 2 N(ψ) N(φ) [⟨ψ|φ⟩² + ⟨ψ|U|φ⟩⟨ψ|U†|φ⟩]

    Attributes:
        lhs: ⟨ψ|φ⟩², the inner product before.
        rhs: The inner product after, from the formula above.
        residual: |lhs − rhs|.
        phase_min_residual: ||lhs| − |rhs||, the residual minimized over
            a global phase.
        cross_term: ⟨ψ|U|φ⟩⟨ψ|U†|φ⟩.
        normalization_psi: N(ψ) = 1/√(2(1 + |⟨ψ|U|ψ⟩|²)).
        normalization_phi: N(φ), likewise.
        oracle_lhs: ⟨ψψ|φφ⟩ computed on the two-copy space.
        oracle_rhs: The inner product of the entangled two-copy states
            computed on the two-copy space.
    """

    lhs: complex
    rhs: complex
    residual: float
    phase_min_residual: float
    cross_term: complex
    normalization_psi: float
    normalization_phi: float
    oracle_lhs: complex
    oracle_rhs: complex

    @property
    def oracle_residual(self) -> float:
        """Largest deviation between the formulas and the oracle."""
        return max(abs(self.lhs - self.oracle_lhs), abs(self.rhs - self.oracle_rhs))


def entangling_unitarity_residual(
    psi: StateVector, phi: StateVector, unitary: UnitaryMatrix
) -> EntanglingResidual:
    """Check whether one unitary could entangle mutations of ψ and φ.

    A nonzero residual certifies that no such unitary exists.

    Raises:
        DimensionError: if the dimensions don't match.

    Example:

        >>> zero = StateVector.basis(2, 0)
        >>> plus = StateVector.from_amplitudes([1, 1])
        >>> identity = UnitaryMatrix.identity(2)
        >>> result = entangling_unitarity_residual(zero, plus, identity)
        >>> round(result.residual, 12)
        0.0
    """
    if psi.dim != phi.dim:
        raise DimensionError(f"states of dims {psi.dim} and {phi.dim}")
    _check_dims(psi, unitary)
    overlap = inner_product(psi, phi)
    forward = inner_product(psi, unitary.apply(phi))
    backward = inner_product(psi, unitary.dagger().apply(phi))
    cross_term = forward * backward
    norm_psi = 1.0 / np.sqrt(2.0 * (1.0 + overlap_unentangled(psi, unitary)))
    norm_phi = 1.0 / np.sqrt(2.0 * (1.0 + overlap_unentangled(phi, unitary)))
    lhs = overlap**2
    rhs = complex(2.0 * norm_psi * norm_phi * (overlap**2 + cross_term))
    oracle_lhs = inner_product(tensor(psi, psi), tensor(phi, phi))
    oracle_rhs = inner_product(
        entangled_mutation_state(psi, unitary, 2),
        entangled_mutation_state(phi, unitary, 2),
    )
    return EntanglingResidual(
        lhs=lhs,
        rhs=rhs,
        residual=float(abs(lhs - rhs)),
        phase_min_residual=float(abs(abs(lhs) - abs(rhs))),
        cross_term=cross_term,
        normalization_psi=float(norm_psi),
        normalization_phi=float(norm_phi),
        oracle_lhs=oracle_lhs,
        oracle_rhs=oracle_rhs,
    )


def qubit_orthogonal_example(a: complex, b: complex) -> EntanglingResidual:
    """Evaluate `entangling_unitarity_residual()` for |0⟩ and |1⟩.

    The unitary is `qubit_unitary(a, b)`, i.e. U|0⟩ = a|0⟩ + b|1⟩. The
    cross term then is −(b*)², so even orthogonal species cannot be
    entangled with their mutants unless b = 0.

    Raises:
        ArgumentError: if |a|² + |b|² ≠ 1.

    Example:

        >>> result = qubit_orthogonal_example(0, 1)
        >>> round(result.cross_term.real, 12)
        -1.0
        >>> round(result.residual, 12)
        1.0
    """
    unitary = qubit_unitary(a, b)
    return entangling_unitarity_residual(
        StateVector.basis(2, 0), StateVector.basis(2, 1), unitary
    )
