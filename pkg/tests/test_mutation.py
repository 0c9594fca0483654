# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Tests for `qspecies.mutation`."""

import numpy as np
import pytest

from qspecies.hilbert import (
    PAULI_X,
    ArgumentError,
    CapacityError,
    DimensionError,
    StateVector,
    Tolerances,
    UnitaryMatrix,
    inner_product,
    qubit_unitary,
    random_state,
    random_unitary,
)
from qspecies.mutation import (
    MAX_COPIES,
    canonical_mutation,
    entangled_mutation_state,
    entangled_overlap,
    entangling_unitarity_residual,
    mutation_normalization,
    mutation_report,
    overlap_entangled_closed_form,
    overlap_entangled_tensor,
    overlap_unentangled,
    paradox_sweep,
    qubit_orthogonal_example,
)


class TestOverlaps:
    def test_closed_form_matches_tensor(self) -> None:
        rng = np.random.default_rng(200)
        for index in range(200):
            dim = 2 + index % 2
            psi = random_state(dim, rng)
            unitary = random_unitary(dim, rng)
            for copies in range(2, 7):
                closed = overlap_entangled_closed_form(psi, unitary, copies)
                brute = overlap_entangled_tensor(psi, unitary, copies)
                assert closed == pytest.approx(brute, abs=1e-10), (index, copies)

    def test_normalization_matches_state(self) -> None:
        rng = np.random.default_rng(201)
        for copies in range(1, 7):
            psi, unitary = random_state(2, rng), random_unitary(2, rng)
            s2 = overlap_unentangled(psi, unitary)
            expected = 1.0 / np.sqrt(copies + copies * (copies - 1) * s2)
            assert mutation_normalization(s2, copies) == pytest.approx(
                expected, abs=1e-12
            )
            state = entangled_mutation_state(psi, unitary, copies)
            assert np.linalg.norm(state.amplitudes) == pytest.approx(1.0, abs=1e-12)

    def test_single_copy_is_the_mutant(self) -> None:
        psi, unitary = random_state(3, 4), random_unitary(3, 5)
        state = entangled_mutation_state(psi, unitary, 1)
        assert np.allclose(state.amplitudes, unitary.apply(psi).amplitudes)
        assert entangled_overlap(0.3, 1) == pytest.approx(0.3)

    def test_state_is_symmetric(self) -> None:
        psi, unitary = random_state(2, 6), random_unitary(2, 7)
        state = entangled_mutation_state(psi, unitary, 3).amplitudes.reshape(2, 2, 2)
        for axes in [(1, 0, 2), (0, 2, 1), (2, 1, 0)]:
            assert np.allclose(state, np.transpose(state, axes), atol=1e-12)

    def test_orthogonal_mutation(self) -> None:
        zero = StateVector.basis(2, 0)
        assert overlap_unentangled(zero, PAULI_X) == 0.0
        for copies in [1, 2, 5, 1000]:
            assert entangled_overlap(0.0, copies) == 0.0
        state = entangled_mutation_state(zero, PAULI_X, 3)
        w_state = np.zeros(8)
        w_state[[1, 2, 4]] = 1.0 / np.sqrt(3.0)
        assert np.allclose(state.amplitudes, w_state)

    def test_trivial_mutation(self) -> None:
        psi = random_state(2, 8)
        identity = UnitaryMatrix.identity(2)
        assert overlap_unentangled(psi, identity) == pytest.approx(1.0)
        assert overlap_entangled_tensor(psi, identity, 4) == pytest.approx(1.0)
        assert entangled_overlap(1.0, MAX_COPIES) == 1.0

    def test_known_value(self) -> None:
        assert entangled_overlap(0.5, 3) == 0.75
        assert entangled_overlap(0.25, 4) == pytest.approx(4 * 0.25 / 1.75)

    def test_max_copies(self) -> None:
        assert 0.999 < entangled_overlap(0.5, MAX_COPIES) < 1.0
        with pytest.raises(ArgumentError, match="number of copies"):
            entangled_overlap(0.5, MAX_COPIES + 1)
        with pytest.raises(ArgumentError, match="number of copies"):
            entangled_overlap(0.5, 0)

    @pytest.mark.parametrize("s2", [-0.1, 1.1, float("nan")])
    def test_rejects_bad_overlap(self, s2: float) -> None:
        with pytest.raises(ArgumentError, match="squared overlap"):
            entangled_overlap(s2, 2)

    def test_capacity(self) -> None:
        psi, unitary = canonical_mutation(0.5)
        with pytest.raises(CapacityError):
            entangled_mutation_state(psi, unitary, 21)
        with Tolerances(max_total_dim=16), pytest.raises(CapacityError):
            overlap_entangled_tensor(psi, unitary, 5)

    def test_checks_arguments(self) -> None:
        psi, unitary = canonical_mutation(0.5)
        with pytest.raises(ArgumentError, match="at least one copy"):
            entangled_mutation_state(psi, unitary, 0)
        with pytest.raises(DimensionError):
            overlap_unentangled(StateVector.basis(3, 0), unitary)


class TestParadoxSweep:
    def test_doubling_reaches_one(self) -> None:
        psi, unitary = canonical_mutation(0.5)
        copies = [2**k for k in range(11)]
        reports = paradox_sweep(psi, unitary, copies)
        assert [report.copies for report in reports] == copies
        overlaps = [report.overlap_entangled for report in reports]
        assert all(a < b for a, b in zip(overlaps, overlaps[1:]))
        assert overlaps[-1] >= 0.999
        for report in reports:
            assert report.overlap_unentangled == pytest.approx(0.5)
            assert report.oracle_overlap is None

    def test_ratio(self) -> None:
        psi, unitary = canonical_mutation(0.2)
        for report in paradox_sweep(psi, unitary, [1, 3, 7, 100]):
            assert report.ratio == pytest.approx(
                report.overlap_entangled / report.overlap_unentangled
            )

    def test_oracle_where_it_fits(self) -> None:
        psi, unitary = canonical_mutation(0.3)
        with Tolerances(max_total_dim=2**8):
            reports = paradox_sweep(psi, unitary, [1, 4, 8, 9, 64], oracle=True)
        oracles = [report.oracle_overlap for report in reports]
        assert oracles[3:] == [None, None]
        for report in reports[:3]:
            assert report.oracle_overlap == pytest.approx(
                report.overlap_entangled, abs=1e-10
            )

    def test_worker_count_does_not_matter(self) -> None:
        psi, unitary = canonical_mutation(0.7)
        copies = list(range(1, 40))
        serial = paradox_sweep(psi, unitary, copies, max_workers=1)
        parallel = paradox_sweep(psi, unitary, copies, max_workers=8)
        assert serial == parallel

    def test_rejects_bad_copies(self) -> None:
        psi, unitary = canonical_mutation(0.5)
        with pytest.raises(ArgumentError, match="sorted"):
            paradox_sweep(psi, unitary, [4, 2])
        with pytest.raises(ArgumentError, match="positive"):
            paradox_sweep(psi, unitary, [0, 1])

    def test_report(self) -> None:
        psi, unitary = canonical_mutation(0.5)
        report = mutation_report(psi, unitary, 2, oracle=True)
        assert report.copies == 2
        assert report.overlap_entangled == pytest.approx(2 / 3)
        assert report.normalization == pytest.approx(1.0 / np.sqrt(3.0))
        assert report.oracle_overlap == pytest.approx(2 / 3, abs=1e-12)


class TestEntanglingResidual:
    def test_random_trials_violate(self) -> None:
        rng = np.random.default_rng(1000)
        results = []
        for _ in range(1000):
            psi, phi = random_state(2, rng), random_state(2, rng)
            unitary = random_unitary(2, rng)
            results.append(entangling_unitarity_residual(psi, phi, unitary))
        violations = sum(result.residual > 1e-6 for result in results)
        assert violations >= 990
        assert all(result.phase_min_residual > 1e-6 for result in results)
        assert max(result.oracle_residual for result in results) < 1e-12

    def test_cross_term(self) -> None:
        rng = np.random.default_rng(20)
        for _ in range(20):
            a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
            norm = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
            a, b = a / norm, b / norm
            result = qubit_orthogonal_example(a, b)
            expected = -(np.conj(b) ** 2)
            assert abs(result.cross_term - expected) < 1e-12
            assert result.lhs == 0.0
            assert result.residual > 1e-6
            assert result.oracle_residual < 1e-12

    def test_fields_are_builtin_numbers(self) -> None:
        result = qubit_orthogonal_example(0, 1)
        assert type(result.residual) is float
        assert type(result.phase_min_residual) is float
        assert type(result.rhs) is complex
        assert type(result.residual > 0) is bool

    def test_trivial_mutation_is_consistent(self) -> None:
        rng = np.random.default_rng(21)
        identity = UnitaryMatrix.identity(3)
        for _ in range(20):
            psi, phi = random_state(3, rng), random_state(3, rng)
            result = entangling_unitarity_residual(psi, phi, identity)
            assert result.residual < 1e-12

    def test_no_mutation_of_orthogonal_pair(self) -> None:
        result = qubit_orthogonal_example(1, 0)
        assert result.residual == pytest.approx(0.0, abs=1e-15)
        assert abs(result.cross_term) == pytest.approx(0.0, abs=1e-15)

    def test_oracle_sides(self) -> None:
        psi, phi = random_state(2, 30), random_state(2, 31)
        unitary = qubit_unitary(0.6, 0.8j)
        result = entangling_unitarity_residual(psi, phi, unitary)
        assert result.oracle_lhs == pytest.approx(inner_product(psi, phi) ** 2)
        assert result.normalization_psi == pytest.approx(
            1.0 / np.sqrt(2.0 * (1.0 + overlap_unentangled(psi, unitary)))
        )

    def test_checks_dims(self) -> None:
        with pytest.raises(DimensionError):
            entangling_unitarity_residual(
                StateVector.basis(2, 0), StateVector.basis(3, 0), PAULI_X
            )
        with pytest.raises(ArgumentError):
            qubit_orthogonal_example(1, 1)
