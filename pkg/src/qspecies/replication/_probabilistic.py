# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Probabilistic replication of two linearly independent states.

A unitary acting on organism, nutrient and a probe maps each input
|ψ_i⟩|w⟩|P₀⟩ to

    √p |ψ_i⟩|ψ_i⟩|r_i⟩|P₁⟩ + √(1−p) |Φ_i⟩,

where the failure branches |Φ_i⟩ have no component along |P₁⟩. Measuring
the probe then yields a perfect copy with probability *p*. Unitarity
demands that the Gram matrix of the inputs is preserved, which caps *p*
at 1/(1+|⟨ψ₁|ψ₂⟩|).
"""

from __future__ import annotations

import dataclasses
import logging

import numpy as np
from scipy.linalg import orth
from scipy.optimize import minimize_scalar

from qspecies.hilbert import (
    ArgumentError,
    CompositeSpace,
    DimensionError,
    IsometryError,
    Seed,
    StateVector,
    UnitaryMatrix,
    get_current_tolerances,
    inner_product,
    is_psd,
    psd_factor,
    tensor,
    unitary_from_pairs,
)

from ._errors import DegenerateInputError, InfeasibleError

__all__ = (
    "DuanGuoOptimum",
    "MachineResiduals",
    "ProbCloneMachine",
    "ProbCloneSample",
    "build_prob_clone_machine",
    "canonical_pair",
    "duan_guo_bound",
    "duan_guo_max_probability",
    "duan_guo_search",
    "sample_prob_clone",
)

LOG = logging.getLogger(__name__)

REJECTED_DIM = 2
"""Dimension of the rejected factor of the machine."""

PROBE_DIM = 2
"""Dimension of the probe. |P₀⟩ = |P_fail⟩ = |0⟩ and |P₁⟩ = |1⟩."""


def canonical_pair(overlap: complex) -> tuple[StateVector, StateVector]:
    """Return |0⟩ and a qubit state whose overlap with it is *overlap*.

    Raises:
        ArgumentError: if ``abs(overlap) > 1``.

    Example:

        >>> psi1, psi2 = canonical_pair(0.5)
        >>> round(inner_product(psi1, psi2).real, 12)
        0.5
    """
    overlap = complex(overlap)
    weight = abs(overlap) ** 2
    if weight > 1.0 + get_current_tolerances().norm:
        raise ArgumentError(f"overlap must not exceed 1 in magnitude: {overlap!r}")
    first = StateVector.basis(2, 0)
    second = StateVector([overlap, np.sqrt(max(0.0, 1.0 - weight))])
    return first, second


def _overlap_checked(psi1: StateVector, psi2: StateVector) -> complex:
    overlap = inner_product(psi1, psi2)
    if 1.0 - abs(overlap) ** 2 <= get_current_tolerances().gram:
        raise DegenerateInputError(
            "input states are linearly dependent: "
            f"|⟨ψ₁|ψ₂⟩| = {abs(overlap)!r}"
        )
    return overlap


def _input_gram(overlap: complex) -> np.ndarray:
    return np.array([[1.0, overlap], [np.conj(overlap), 1.0]])


def _clone_gram(overlap: complex, rejected_overlap: complex) -> np.ndarray:
    off_diagonal = overlap**2 * rejected_overlap
    return np.array([[1.0, off_diagonal], [np.conj(off_diagonal), 1.0]])


def _aligned_rejected_overlap(overlap: complex, magnitude: float) -> complex:
    # Chosen such that s² ⟨r₁|r₂⟩ has the same phase as s.
    return complex(magnitude * np.exp(-1j * np.angle(overlap)))


def _lowest_eigenvalue(matrix: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(matrix)[0])


def _max_probability_at(overlap: complex, magnitude: float) -> float:
    """Bisect the largest *p* with G₁ − p G₂ positive semidefinite."""
    first = _input_gram(overlap)
    second = _clone_gram(overlap, _aligned_rejected_overlap(overlap, magnitude))

    def feasible(p: float) -> bool:
        # Strict check, so that the result always passes the tolerant
        # check in `build_prob_clone_machine()`.
        return _lowest_eigenvalue(first - p * second) >= 0.0

    if feasible(1.0):
        return 1.0
    low, high = 0.0, 1.0
    while high - low > 1e-14:
        mid = 0.5 * (low + high)
        if feasible(mid):
            low = mid
        else:
            high = mid
    return low


@dataclasses.dataclass(frozen=True)
class DuanGuoOptimum:
    """Result of `duan_guo_search()`.

    Attributes:
        probability: The largest symmetric success probability found.
        rejected_overlap: The ⟨r₁|r₂⟩ at which it is attained.
        bound: The analytic upper bound 1/(1+|⟨ψ₁|ψ₂⟩|).
    """

    probability: float
    rejected_overlap: complex
    bound: float


def duan_guo_bound(psi1: StateVector, psi2: StateVector) -> float:
    """Return 1/(1+|⟨ψ₁|ψ₂⟩|), the cap on the success probability."""
    return 1.0 / (1.0 + abs(inner_product(psi1, psi2)))


def duan_guo_search(psi1: StateVector, psi2: StateVector) -> DuanGuoOptimum:
    """Search the largest symmetric success probability numerically.

    For each magnitude of ⟨r₁|r₂⟩ (its phase is aligned analytically),
    the largest *p* that keeps G₁ − p G₂ positive semidefinite is found
    by bisection. The magnitude is then optimized by a bounded scalar
    search. Both ends of the magnitude interval are evaluated as well,
    since the optimum usually sits at one of them.

    Raises:
        DegenerateInputError: if the inputs are linearly dependent.
        DimensionError: if they have different dimensions.
    """
    overlap = _overlap_checked(psi1, psi2)
    result = minimize_scalar(
        lambda m: -_max_probability_at(overlap, m),
        bounds=(0.0, 1.0),
        method="bounded",
        options={"xatol": 1e-12},
    )
    candidates = [(0.0, _max_probability_at(overlap, 0.0))]
    candidates.append((1.0, _max_probability_at(overlap, 1.0)))
    candidates.append((float(result.x), -float(result.fun)))
    LOG.debug("search candidates (|⟨r₁|r₂⟩|, p): %s", candidates)
    magnitude, probability = max(candidates, key=lambda pair: pair[1])
    return DuanGuoOptimum(
        probability=probability,
        rejected_overlap=_aligned_rejected_overlap(overlap, magnitude),
        bound=1.0 / (1.0 + abs(overlap)),
    )


def duan_guo_max_probability(psi1: StateVector, psi2: StateVector) -> float:
    """Return the largest symmetric success probability.

    This is the *probability* of `duan_guo_search()`. It agrees with
    `duan_guo_bound()` up to the search precision.

    Raises:
        DegenerateInputError: if the inputs are linearly dependent.
        DimensionError: if they have different dimensions.

    Example:

        >>> psi1, psi2 = canonical_pair(0.5)
        >>> round(duan_guo_max_probability(psi1, psi2), 9)
        0.666666667
    """
    return duan_guo_search(psi1, psi2).probability


@dataclasses.dataclass(frozen=True)
class MachineResiduals:
    """Deviations of a `ProbCloneMachine` from its defining properties.

    Attributes:
        gram: Largest deviation of ⟨T_i|T_j⟩ from ⟨ψ_i|ψ_j⟩.
        clone: Largest distance between a renormalized success branch
            and the ideal |ψ_i⟩|ψ_i⟩|r_i⟩.
        probability: Largest deviation of a success weight from *p*.
    """

    gram: float
    clone: float
    probability: float

    @property
    def worst(self) -> float:
        """The largest of all residuals."""
        return max(self.gram, self.clone, self.probability)


@dataclasses.dataclass(frozen=True)
class ProbCloneMachine:
    """An explicit probabilistic cloner for two states.

    Don't instantiate this directly, use `build_prob_clone_machine()`.

    The machine acts on organism ⊗ copy ⊗ rejected ⊗ probe. Before the
    interaction, the copy and rejected factors hold the nutrient |w⟩
    and the probe is in |P₀⟩.

    Attributes:
        inputs: The two states |ψ₁⟩, |ψ₂⟩.
        probabilities: The success probabilities (p₁, p₂).
        rejected_states: The rejected states |r₁⟩, |r₂⟩ of the copies.
        nutrient: The state |w⟩ of copy ⊗ rejected.
        probe_ready: The initial probe state |P₀⟩.
        probe_success: The probe outcome |P₁⟩ that heralds a copy.
        space: The factorization organism ⊗ copy ⊗ rejected ⊗ probe.
        images: The image vectors T₁, T₂ of the two inputs.
        unitary: A unitary on the full space that maps each input to
            its image.
    """

    inputs: tuple[StateVector, StateVector]
    probabilities: tuple[float, float]
    rejected_states: tuple[StateVector, StateVector]
    nutrient: StateVector
    probe_ready: StateVector
    probe_success: StateVector
    space: CompositeSpace
    images: tuple[StateVector, StateVector] = dataclasses.field(repr=False)
    unitary: UnitaryMatrix = dataclasses.field(repr=False)

    def _index(self, which: int) -> int:
        if which not in (1, 2):
            raise ArgumentError(f"input must be 1 or 2, got {which!r}")
        return which - 1

    def input_state(self, which: int) -> StateVector:
        """Return |ψ_i⟩|w⟩|P₀⟩ for input 1 or 2."""
        index = self._index(which)
        return tensor(tensor(self.inputs[index], self.nutrient), self.probe_ready)

    def ideal_clone(self, which: int) -> StateVector:
        """Return |ψ_i⟩|ψ_i⟩|r_i⟩ for input 1 or 2."""
        index = self._index(which)
        psi = self.inputs[index]
        return tensor(tensor(psi, psi), self.rejected_states[index])

    @property
    def isometry(self) -> np.ndarray:
        """The machine restricted to the span of the two inputs.

        The columns are the images of an orthonormal basis of that
        span.
        """
        frame = orth(np.stack([np.asarray(self.input_state(i)) for i in (1, 2)], 1))
        return self.unitary.entries @ frame

    def success_branch(self, which: int) -> np.ndarray:
        """Return the unnormalized component of the output along |P₁⟩."""
        output = self.unitary.entries @ self.input_state(which).amplitudes
        probe = self.probe_success.amplitudes
        return output.reshape(-1, PROBE_DIM) @ probe.conj()

    def validate(self) -> MachineResiduals:
        """Recompute the defining properties from the unitary."""
        outputs = [self.unitary.apply(self.input_state(i)) for i in (1, 2)]
        gram = abs(inner_product(*outputs) - inner_product(*self.inputs))
        clone = 0.0
        probability = 0.0
        for which in (1, 2):
            branch = self.success_branch(which)
            weight = float(np.vdot(branch, branch).real)
            expected = self.probabilities[which - 1]
            probability = max(probability, abs(weight - expected))
            if weight > 0.0:
                ideal = self.ideal_clone(which).amplitudes
                distance = float(np.linalg.norm(branch / np.sqrt(weight) - ideal))
                clone = max(clone, distance)
        return MachineResiduals(gram=gram, clone=clone, probability=probability)


def build_prob_clone_machine(
    psi1: StateVector,
    psi2: StateVector,
    p: float,
    rejected_overlap: complex | None = None,
) -> ProbCloneMachine:
    """Construct a machine that clones either input with probability *p*.

    The failure branches are built from a factorization of their Gram
    matrix, which follows from Gram preservation:

        (1−p) ⟨Φ_i|Φ_j⟩ = ⟨ψ_i|ψ_j⟩ − p ⟨ψ_i|ψ_j⟩² ⟨r_i|r_j⟩

    Args:
        psi1: The first input state.
        psi2: The second input state.
        p: The common success probability.
        rejected_overlap: The overlap ⟨r₁|r₂⟩ of the rejected states.
            The default is the one that admits the largest *p*.

    Raises:
        ArgumentError: if *p* is negative or ``abs(rejected_overlap)``
            exceeds 1.
        DegenerateInputError: if the inputs are linearly dependent.
        DimensionError: if they have different dimensions.
        InfeasibleError: if *p* exceeds the largest feasible success
            probability, i.e. the Gram matrix of the failure branches
            is not positive semidefinite.

    Example:

        >>> psi1, psi2 = canonical_pair(0.5)
        >>> machine = build_prob_clone_machine(psi1, psi2, 2 / 3)
        >>> machine.validate().worst < 1e-10
        True
        >>> build_prob_clone_machine(psi1, psi2, 0.7)
        Traceback (most recent call last):
        ...
        qspecies.replication._errors.InfeasibleError: success probability 0.7 ...
    """
    if psi1.dim != psi2.dim:
        raise DimensionError(f"inputs have dims {psi1.dim} and {psi2.dim}")
    p = float(p)
    if p < 0.0:
        raise ArgumentError(f"success probability must not be negative: {p!r}")
    if p > 1.0:
        raise InfeasibleError(f"success probability {p!r} exceeds 1")
    overlap = _overlap_checked(psi1, psi2)
    if rejected_overlap is None:
        rejected_overlap = _aligned_rejected_overlap(overlap, 1.0)
    rejected_overlap = complex(rejected_overlap)
    if abs(rejected_overlap) > 1.0 + get_current_tolerances().norm:
        raise ArgumentError(
            f"|⟨r₁|r₂⟩| must not exceed 1: {rejected_overlap!r}"
        )
    tol = get_current_tolerances()
    residual = _input_gram(overlap) - p * _clone_gram(overlap, rejected_overlap)
    if not is_psd(residual, tol.psd_floor):
        raise InfeasibleError(
            f"success probability {p!r} exceeds the feasible maximum: "
            f"lowest eigenvalue {_lowest_eigenvalue(residual):.3g}"
        )
    dim = psi1.dim
    rejected = canonical_pair(rejected_overlap)
    nutrient = StateVector.basis(dim * REJECTED_DIM, 0)
    probe_ready = probe_failure = StateVector.basis(PROBE_DIM, 0)
    probe_success = StateVector.basis(PROBE_DIM, 1)
    space = CompositeSpace([dim, dim, REJECTED_DIM, PROBE_DIM])
    if 1.0 - p > tol.psd_floor:
        factor = psd_factor(residual / (1.0 - p))
    else:
        # No failure branch; feasibility already forced G₁ = G₂.
        factor = np.zeros((2, 2), dtype=complex)
    LOG.debug("failure Gram factor: %s", factor.tolist())
    # The failure branches live in span{|0⟩, |1⟩} ⊗ |P_fail⟩.
    failure_dim = dim * dim * REJECTED_DIM
    failure_frame = [
        np.kron(StateVector.basis(failure_dim, a).amplitudes, probe_failure.amplitudes)
        for a in range(2)
    ]
    images = []
    for index, psi in enumerate((psi1, psi2)):
        clone = tensor(tensor(tensor(psi, psi), rejected[index]), probe_success)
        failure = sum(np.conj(factor[index, a]) * failure_frame[a] for a in range(2))
        images.append(
            StateVector(np.sqrt(p) * clone.amplitudes + np.sqrt(1.0 - p) * failure)
        )
    sources = [tensor(tensor(psi, nutrient), probe_ready) for psi in (psi1, psi2)]
    unitary = unitary_from_pairs(sources, images)
    LOG.info("built probabilistic cloner with p = %.6g on %r", p, space)
    return ProbCloneMachine(
        inputs=(psi1, psi2),
        probabilities=(p, p),
        rejected_states=rejected,
        nutrient=nutrient,
        probe_ready=probe_ready,
        probe_success=probe_success,
        space=space,
        images=(images[0], images[1]),
        unitary=unitary,
    )


@dataclasses.dataclass(frozen=True)
class ProbCloneSample:
    """Outcome of `sample_prob_clone()`.

    Attributes:
        which: The input that was fed in, 1 or 2.
        trials: Number of simulated probe measurements.
        successes: Number of measurements with outcome |P₁⟩.
        rate: ``successes / trials``.
        expected: The exact success probability of the machine.
        post_state_residual: Distance between the state after a
            successful measurement and the ideal copy. Zero if the
            machine never succeeds.
    """

    which: int
    trials: int
    successes: int
    rate: float
    expected: float
    post_state_residual: float


def sample_prob_clone(
    machine: ProbCloneMachine, which: int, trials: int, seed: Seed = None
) -> ProbCloneSample:
    """Run the machine on one input and measure the probe *trials* times.

    The post-measurement state on success is computed once and compared
    against the ideal copy.

    Raises:
        ArgumentError: if *which* is not 1 or 2 or *trials* is less than
            one.
        IsometryError: if the success branch is not the ideal copy
            within `Tolerances.norm`.

    Example:

        >>> psi1, psi2 = canonical_pair(0.0)
        >>> machine = build_prob_clone_machine(psi1, psi2, 1.0)
        >>> sample_prob_clone(machine, 2, trials=100, seed=0).rate
        1.0
    """
    if trials < 1:
        raise ArgumentError(f"need at least one trial, got {trials}")
    tol = get_current_tolerances()
    branch = machine.success_branch(which)
    weight = float(np.vdot(branch, branch).real)
    if weight <= tol.norm:
        weight = 0.0
    elif weight >= 1.0 - tol.norm:
        weight = 1.0
    residual = 0.0
    if weight > 0.0:
        ideal = machine.ideal_clone(which).amplitudes
        residual = float(np.linalg.norm(branch / np.linalg.norm(branch) - ideal))
        if residual > tol.norm:
            raise IsometryError(
                f"success branch is not a clone: residual {residual:.3g}"
            )
    rng = np.random.default_rng(seed)
    successes = int(np.count_nonzero(rng.random(trials) < weight))
    LOG.debug("%d of %d trials succeeded, expected p = %.6g", successes, trials, weight)
    return ProbCloneSample(
        which=which,
        trials=trials,
        successes=successes,
        rate=successes / trials,
        expected=weight,
        post_state_residual=residual,
    )

