# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Tests for `qspecies.culling`."""

import numpy as np
import pytest

from qspecies.culling import (
    DomainError,
    cull_gap,
    jozsa_clonability_check,
    make_basis_culler,
)
from qspecies.hilbert import (
    ArgumentError,
    CapacityError,
    DimensionError,
    IsometryError,
    StateVector,
    random_state,
    random_unitary,
    tensor,
)


def blanks(dim: int, layout: str) -> list[StateVector]:
    if layout == "shared":
        return [StateVector.basis(dim, 0)] * dim
    return [StateVector.basis(dim, k) for k in range(dim)]


class TestBasisCuller:
    @pytest.mark.parametrize("dim", [2, 3, 4])
    @pytest.mark.parametrize("layout", ["shared", "orthogonal"])
    @pytest.mark.parametrize("ancilla_dim", [2, 3])
    def test_culls_basis_states(
        self, dim: int, layout: str, ancilla_dim: int
    ) -> None:
        ancilla = StateVector.basis(ancilla_dim, 0)
        culler = make_basis_culler(dim, ancilla, blanks(dim, layout))
        for k in range(dim):
            ket = StateVector.basis(dim, k)
            report = cull_gap(culler, ket, culler.blank_states[k])
            assert report.fidelity_vs_ideal == pytest.approx(1.0, abs=1e-12)
            assert report.diagonal_weight == pytest.approx(1.0, abs=1e-12)
            assert report.offdiag_weight == pytest.approx(0.0, abs=1e-12)
            assert report.recovery_residual < 1e-12

    def test_superpositions_fail(self) -> None:
        rng = np.random.default_rng(77)
        for index in range(300):
            dim = 2 + index % 3
            ancilla = StateVector.basis(2, 0)
            culler = make_basis_culler(dim, ancilla, blanks(dim, "shared"))
            psi = random_state(dim, rng)
            report = cull_gap(culler, psi)
            probabilities = np.abs(psi.amplitudes) ** 2
            assert report.fidelity_vs_ideal < 1.0 - 1e-9
            assert report.diagonal_weight == pytest.approx(np.sum(probabilities**2))
            total = report.diagonal_weight + report.offdiag_weight
            assert total == pytest.approx(1.0)
            assert report.recovery_residual < 1e-10

    def test_uniform_qubit(self) -> None:
        zero = StateVector.basis(2, 0)
        culler = make_basis_culler(2, zero, [zero, zero])
        report = cull_gap(culler, StateVector.from_amplitudes([1, 1]))
        assert report.fidelity_vs_ideal == pytest.approx(0.5, abs=1e-12)
        assert report.diagonal_weight == pytest.approx(0.5, abs=1e-12)
        assert report.offdiag_weight == pytest.approx(0.5, abs=1e-12)

    def test_uniform_qubit_orthogonal_blanks(self) -> None:
        zero = StateVector.basis(2, 0)
        culler = make_basis_culler(2, zero, blanks(2, "orthogonal"))
        report = cull_gap(culler, StateVector.from_amplitudes([1, 1]), zero)
        assert report.fidelity_vs_ideal == pytest.approx(1 / 8, abs=1e-12)
        assert report.diagonal_weight == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("dim", [2, 3])
    def test_trivial_ancilla_has_no_room(self, dim: int) -> None:
        ancilla = StateVector.basis(1, 0)
        with pytest.raises(CapacityError, match="no room"):
            make_basis_culler(dim, ancilla, blanks(dim, "orthogonal"))
        culler = make_basis_culler(1, ancilla, [StateVector.basis(1, 0)])
        assert culler.offdiag_pairs == ()

    def test_offdiag_branches_are_marked(self) -> None:
        zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        culler = make_basis_culler(2, zero, [zero, zero])
        assert culler.offdiag_pairs == ((0, 1), (1, 0))
        expected = tensor(tensor(zero, one), one)
        assert culler.offdiag_targets[0] == expected

    def test_output_is_unit_norm(self) -> None:
        culler = make_basis_culler(3, StateVector.basis(2, 0), blanks(3, "orthogonal"))
        output = culler.apply(random_state(3, 12))
        assert np.linalg.norm(output.amplitudes) == pytest.approx(1.0)

    def test_custom_offdiag_targets(self) -> None:
        zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        targets = [
            tensor(tensor(one, one), one),
            tensor(tensor(zero, one), one),
        ]
        culler = make_basis_culler(2, zero, [zero, zero], targets)
        assert culler.offdiag_targets == tuple(targets)
        with pytest.raises(ArgumentError, match="off-diagonal targets"):
            make_basis_culler(2, zero, [zero, zero], targets[:1])
        with pytest.raises(IsometryError):
            make_basis_culler(2, zero, [zero, zero], [targets[0], targets[0]])

    def test_checks_arguments(self) -> None:
        zero = StateVector.basis(2, 0)
        with pytest.raises(ArgumentError, match="need 2 blank states"):
            make_basis_culler(2, zero, [zero])
        with pytest.raises(DimensionError, match="blank states must have dim 2"):
            make_basis_culler(2, zero, [StateVector.basis(3, 0)] * 2)
        culler = make_basis_culler(2, zero, [zero, zero])
        with pytest.raises(DimensionError):
            cull_gap(culler, StateVector.basis(3, 0))
        with pytest.raises(DimensionError, match="ideal blank"):
            cull_gap(culler, zero, StateVector.basis(3, 0))


def nonorthogonal_family(
    count: int, dim: int, rng: np.random.Generator
) -> list[StateVector]:
    return [random_state(dim, rng) for _ in range(count)]


class TestJozsa:
    def test_transported_ancillas_are_feasible(self) -> None:
        rng = np.random.default_rng(50)
        for index in range(50):
            dim = 2 + index % 3
            states = nonorthogonal_family(2 + index % 2, dim, rng)
            hidden = random_unitary(dim, rng)
            ancillas = [hidden.apply(state) for state in states]
            result = jozsa_clonability_check(states, ancillas)
            assert result.feasible
            assert result.max_residual < 1e-12
            assert result.transport is not None
            assert result.construction_residual is not None
            assert result.construction_residual < 1e-9
            for state, ancilla in zip(states, ancillas):
                image = result.transport.apply(ancilla).amplitudes
                assert np.allclose(image, state.amplitudes, atol=1e-9)

    def test_independent_ancillas_are_infeasible(self) -> None:
        rng = np.random.default_rng(51)
        for index in range(50):
            dim = 2 + index % 3
            states = nonorthogonal_family(3, dim, rng)
            ancillas = nonorthogonal_family(3, dim, rng)
            result = jozsa_clonability_check(states, ancillas)
            assert not result.feasible
            assert result.max_residual > 1e-6
            assert result.transport is None
            assert result.construction_residual is None

    def test_residual_matrix(self) -> None:
        a = StateVector([0.6, 0.8])
        b = StateVector([0.8, 0.6])
        fixed = StateVector.basis(2, 0)
        result = jozsa_clonability_check([a, b], [fixed, fixed])
        assert not result.feasible
        assert result.residuals.shape == (2, 2)
        assert result.max_residual == pytest.approx(1.0 - 0.96)
        assert np.allclose(np.diag(result.residuals), 0.0)

    @pytest.mark.parametrize("theta", [0.3, np.pi / 2, np.pi])
    def test_phase_on_one_ancilla(self, theta: float) -> None:
        states = [StateVector.basis(2, 0), StateVector([0.6, 0.8])]
        ancillas = [
            StateVector.basis(2, 0),
            StateVector([0.6 * np.exp(1j * theta), 0.8]),
        ]
        result = jozsa_clonability_check(states, ancillas)
        assert not result.feasible
        expected = 0.6 * abs(1.0 - np.exp(1j * theta))
        assert result.max_residual == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("epsilon", [1e-3, 1e-5])
    def test_perturbed_ancillas_are_infeasible(self, epsilon: float) -> None:
        rng = np.random.default_rng(52)
        for index in range(50):
            dim = 2 + index % 3
            states = nonorthogonal_family(2 + index % 2, dim, rng)
            hidden = random_unitary(dim, rng)
            ancillas = [hidden.apply(state) for state in states]
            kick = random_state(dim, rng).amplitudes
            ancillas[0] = StateVector.from_amplitudes(
                ancillas[0].amplitudes + epsilon * kick
            )
            result = jozsa_clonability_check(states, ancillas)
            assert not result.feasible, index
            assert result.max_residual > 1e-9

    def test_classifies_mixed_families(self) -> None:
        rng = np.random.default_rng(53)
        misclassified = 0
        for index in range(50):
            dim = 2 + index % 3
            states = nonorthogonal_family(3, dim, rng)
            hidden = random_unitary(dim, rng)
            ancillas = [hidden.apply(state) for state in states]
            transported = index % 2 == 0
            if not transported:
                kick = random_state(dim, rng).amplitudes
                ancillas[1] = StateVector.from_amplitudes(
                    ancillas[1].amplitudes + 1e-4 * kick
                )
            result = jozsa_clonability_check(states, ancillas)
            misclassified += result.feasible != transported
        assert misclassified == 0

    def test_single_constant_ancilla_is_infeasible(self) -> None:
        rng = np.random.default_rng(54)
        for index in range(30):
            dim = 2 + index % 3
            states = nonorthogonal_family(3, dim, rng)
            for k in range(len(states)):
                ancillas = list(states)
                ancillas[k] = StateVector.basis(dim, 0)
                result = jozsa_clonability_check(states, ancillas)
                assert not result.feasible, (index, k)

    def test_rejects_orthogonal_pair(self) -> None:
        zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        plus = StateVector.from_amplitudes([1, 1])
        with pytest.raises(DomainError, match="states 0 and 2 are orthogonal"):
            jozsa_clonability_check([zero, plus, one], [zero, plus, one])

    def test_checks_arguments(self) -> None:
        zero = StateVector.basis(2, 0)
        plus = StateVector.from_amplitudes([1, 1])
        with pytest.raises(ArgumentError, match="at least two"):
            jozsa_clonability_check([zero], [zero])
        with pytest.raises(ArgumentError, match="ancillas"):
            jozsa_clonability_check([zero, plus], [zero])
        with pytest.raises(DimensionError):
            jozsa_clonability_check([zero, plus], [zero, StateVector.basis(3, 0)])
