# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Tests for `qspecies.hilbert`."""

import json
import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from qspecies.hilbert import (
    DEFAULT_TOLERANCES,
    HADAMARD,
    PAULI_X,
    ArgumentError,
    CapacityError,
    CompositeSpace,
    DensityMatrix,
    DimensionError,
    InconsistentToleranceInstalls,
    IsometryError,
    LinearExtensionMap,
    StateVector,
    Tolerances,
    UnitaryMatrix,
    apply_on_factor,
    entanglement_entropy,
    get_current_tolerances,
    gram_matrix,
    inner_product,
    is_psd,
    partial_trace,
    psd_factor,
    purity,
    qubit_unitary,
    random_state,
    random_unitary,
    state_from_json,
    tensor,
    tensor_power,
    to_jsonable,
    unitary_from_json,
    unitary_from_pairs,
    von_neumann_entropy,
)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240517)


class TestStateVector:
    def test_amplitudes_are_read_only(self) -> None:
        source = np.array([1.0, 0.0])
        state = StateVector(source)
        source[0] = 0.0
        assert state.amplitudes[0] == 1.0
        with pytest.raises(ValueError, match="read-only"):
            state.amplitudes[0] = 0.0

    def test_rejects_unnormalized(self) -> None:
        with pytest.raises(ArgumentError, match="not normalized"):
            StateVector([1.0, 1.0])

    def test_accepts_rounding_noise(self) -> None:
        state = StateVector([1.0 + 1e-12, 0.0])
        assert state.dim == 2

    @pytest.mark.parametrize("amplitudes", [[], [[1.0]]])
    def test_rejects_bad_shape(self, amplitudes: list) -> None:
        with pytest.raises(ArgumentError, match="non-empty 1D"):
            StateVector(amplitudes)

    @pytest.mark.parametrize("bad", [np.nan, np.inf])
    def test_rejects_non_finite(self, bad: float) -> None:
        with pytest.raises(ArgumentError, match="finite"):
            StateVector([bad, 0.0])
        with pytest.raises(ArgumentError, match="finite"):
            StateVector.from_amplitudes([bad, 1.0])

    def test_from_amplitudes_rejects_zero(self) -> None:
        with pytest.raises(ArgumentError, match="zero vector"):
            StateVector.from_amplitudes([0.0, 0.0])

    def test_basis_index(self) -> None:
        assert StateVector.basis(3, 2).basis_index() == 2
        assert StateVector([0.0, 1j, 0.0]).basis_index() == 1
        assert StateVector.from_amplitudes([1, 1]).basis_index() is None

    def test_basis_out_of_range(self) -> None:
        with pytest.raises(ArgumentError, match="out of range"):
            StateVector.basis(2, 2)

    def test_equality_and_hash(self) -> None:
        first = StateVector([0.6, 0.8j])
        second = StateVector(np.array([0.6, 0.8j]))
        assert first == second
        assert hash(first) == hash(second)
        assert first != StateVector([0.8j, 0.6])


class TestUnitaryMatrix:
    def test_rejects_non_unitary(self) -> None:
        with pytest.raises(ArgumentError, match="not unitary"):
            UnitaryMatrix([[1.0, 0.0], [0.0, 2.0]])

    def test_rejects_non_finite(self) -> None:
        with pytest.raises(ArgumentError, match="finite"):
            UnitaryMatrix([[np.nan, 0.0], [0.0, 1.0]])
        with pytest.raises(ArgumentError, match="finite"):
            qubit_unitary(np.nan, 0.0)

    def test_preserves_inner_products(self, rng: np.random.Generator) -> None:
        for dim in [2, 3, 5]:
            for _ in range(20):
                a, b = random_state(dim, rng), random_state(dim, rng)
                unitary = random_unitary(dim, rng)
                before = inner_product(a, b)
                after = inner_product(unitary.apply(a), unitary.apply(b))
                assert abs(after - before) < 1e-12

    def test_rejects_non_square(self) -> None:
        with pytest.raises(ArgumentError, match="square"):
            UnitaryMatrix(np.eye(3)[:2])

    def test_power_and_dagger(self, rng: np.random.Generator) -> None:
        unitary = random_unitary(3, rng)
        product = unitary @ unitary.dagger()
        assert np.allclose(product.entries, np.eye(3), atol=1e-12)
        assert np.allclose(unitary.power(-2).entries, unitary.dagger().power(2).entries)
        assert np.allclose(unitary.power(0).entries, np.eye(3))

    def test_apply_checks_dimension(self) -> None:
        with pytest.raises(DimensionError):
            PAULI_X.apply(StateVector.basis(3, 0))

    def test_hadamard_is_involution(self) -> None:
        assert np.allclose(HADAMARD.power(2).entries, np.eye(2), atol=1e-15)


class TestDensityMatrix:
    def test_rejects_negative_eigenvalue(self) -> None:
        with pytest.raises(ArgumentError, match="negative eigenvalue"):
            DensityMatrix([[1.5, 0.0], [0.0, -0.5]])

    def test_rejects_wrong_trace(self) -> None:
        with pytest.raises(ArgumentError, match="trace"):
            DensityMatrix(np.eye(2))

    def test_rejects_non_hermitian(self) -> None:
        with pytest.raises(ArgumentError, match="Hermitian"):
            DensityMatrix([[0.5, 0.1], [0.0, 0.5]])

    def test_pure_state(self, rng: np.random.Generator) -> None:
        rho = DensityMatrix.from_state(random_state(4, rng))
        assert purity(rho) == pytest.approx(1.0, abs=1e-12)
        assert von_neumann_entropy(rho) == pytest.approx(0.0, abs=1e-8)


class TestCompositeSpace:
    def test_capacity(self) -> None:
        with pytest.raises(CapacityError, match="limit"):
            CompositeSpace([2] * 21)

    def test_capacity_follows_tolerances(self) -> None:
        with Tolerances(max_total_dim=8), pytest.raises(CapacityError):
            CompositeSpace([2, 2, 2, 2])

    @pytest.mark.parametrize("dims", [[], [2, 0]])
    def test_rejects_bad_factors(self, dims: list) -> None:
        with pytest.raises(ArgumentError, match="positive"):
            CompositeSpace(dims)

    def test_check_slot(self) -> None:
        space = CompositeSpace([2, 3])
        assert space.check_slot(1) == 1
        with pytest.raises(DimensionError, match="slot 2"):
            space.check_slot(2)


def test_tensor_is_row_major() -> None:
    one, zero = StateVector.basis(2, 1), StateVector.basis(3, 0)
    assert tensor(one, zero).basis_index() == 3


def test_tensor_is_bilinear(rng: np.random.Generator) -> None:
    for _ in range(20):
        a = random_state(2, rng)
        b, c = random_state(3, rng), random_state(3, rng)
        alpha, beta = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        combined = alpha * b.amplitudes + beta * c.amplitudes
        norm = np.linalg.norm(combined)
        mixed = StateVector(combined / norm)
        expected = alpha * tensor(a, b).amplitudes + beta * tensor(a, c).amplitudes
        right = tensor(a, mixed).amplitudes * norm
        left = tensor(mixed, a).amplitudes * norm
        assert np.allclose(right, expected, atol=1e-12)
        flipped = alpha * tensor(b, a).amplitudes + beta * tensor(c, a).amplitudes
        assert np.allclose(left, flipped, atol=1e-12)


def test_tensor_power_checks_capacity_first() -> None:
    with pytest.raises(CapacityError, match="21 copies"):
        tensor_power(StateVector.basis(2, 0), 21)


def test_tensor_power_rejects_zero_copies() -> None:
    with pytest.raises(ArgumentError, match="at least one copy"):
        tensor_power(StateVector.basis(2, 0), 0)


def test_inner_product_is_conjugate_linear() -> None:
    a = StateVector([0.0, 1j])
    b = StateVector.basis(2, 1)
    assert inner_product(a, b) == -1j
    with pytest.raises(DimensionError):
        inner_product(a, StateVector.basis(3, 0))


@pytest.mark.parametrize("slot", [0, 1, 2])
def test_apply_on_factor_matches_kron(slot: int, rng: np.random.Generator) -> None:
    space = CompositeSpace([2, 3, 2])
    unitary = random_unitary(space.factor_dims[slot], rng)
    state = random_state(space.total_dim, rng)
    factors = [np.eye(dim) for dim in space.factor_dims]
    factors[slot] = unitary.entries
    full = np.kron(np.kron(factors[0], factors[1]), factors[2])
    result = apply_on_factor(unitary, state, space, slot)
    assert np.allclose(result.amplitudes, full @ state.amplitudes, atol=1e-12)


def test_apply_on_factor_checks_dims() -> None:
    space = CompositeSpace([2, 3])
    state = StateVector.basis(6, 0)
    with pytest.raises(DimensionError, match="slot 1"):
        apply_on_factor(PAULI_X, state, space, 1)
    with pytest.raises(DimensionError, match="does not fit"):
        apply_on_factor(PAULI_X, StateVector.basis(4, 0), space, 0)


class TestPartialTrace:
    def test_product_state_stays_pure(self, rng: np.random.Generator) -> None:
        a, b = random_state(2, rng), random_state(3, rng)
        space = CompositeSpace([2, 3])
        rho = partial_trace(tensor(a, b), space, [1])
        expected = np.outer(b.amplitudes, b.amplitudes.conj())
        assert np.allclose(rho.entries, expected, atol=1e-12)
        assert entanglement_entropy(tensor(a, b), space, [0]) == 0.0

    def test_bell_state(self) -> None:
        bell = StateVector.from_amplitudes([1, 0, 0, 1])
        space = CompositeSpace([2, 2])
        assert purity(partial_trace(bell, space, [1])) == pytest.approx(0.5)
        assert entanglement_entropy(bell, space, [1]) == pytest.approx(1.0)

    def test_keep_order_is_irrelevant(self, rng: np.random.Generator) -> None:
        space = CompositeSpace([2, 2, 2])
        state = random_state(8, rng)
        first = partial_trace(state, space, [0, 2])
        second = partial_trace(state, space, [2, 0])
        assert np.array_equal(first.entries, second.entries)

    def test_entropy_is_symmetric(self, rng: np.random.Generator) -> None:
        space = CompositeSpace([2, 3, 2])
        state = random_state(12, rng)
        left = entanglement_entropy(state, space, [0])
        right = entanglement_entropy(state, space, [1, 2])
        rho = partial_trace(state, space, [0])
        assert left == pytest.approx(right, abs=1e-10)
        assert left == pytest.approx(von_neumann_entropy(rho), abs=1e-8)

    def test_rejects_trivial_cut(self) -> None:
        space = CompositeSpace([2, 2])
        state = StateVector.basis(4, 0)
        with pytest.raises(ArgumentError, match="each side"):
            entanglement_entropy(state, space, [0, 1])
        with pytest.raises(ArgumentError, match="at least one"):
            partial_trace(state, space, [])

    def test_entropy_ignores_local_unitaries(
        self, rng: np.random.Generator
    ) -> None:
        space = CompositeSpace([2, 3, 2])
        for _ in range(20):
            state = random_state(12, rng)
            rotated = state
            for slot, dim in enumerate(space.factor_dims):
                local = random_unitary(dim, rng)
                rotated = apply_on_factor(local, rotated, space, slot)
            for cut in [[0], [1], [2], [0, 2]]:
                before = entanglement_entropy(state, space, cut)
                after = entanglement_entropy(rotated, space, cut)
                assert after == pytest.approx(before, abs=1e-10)


class TestRandom:
    def test_state_is_reproducible(self) -> None:
        assert random_state(5, 42) == random_state(5, 42)
        assert random_state(5, 42) != random_state(5, 43)

    def test_unitary_is_reproducible(self) -> None:
        assert random_unitary(3, 42) == random_unitary(3, 42)

    def test_generator_advances(self) -> None:
        rng = np.random.default_rng(1)
        assert random_state(2, rng) != random_state(2, rng)

    def test_haar_mean_vanishes(self, rng: np.random.Generator) -> None:
        samples = [random_unitary(2, rng).entries for _ in range(2000)]
        assert np.max(np.abs(np.mean(samples, axis=0))) < 0.05

    def test_rejects_bad_dim(self) -> None:
        with pytest.raises(ArgumentError):
            random_state(0)
        with pytest.raises(ArgumentError):
            random_unitary(0)


class TestLinalg:
    def test_gram_matrix_is_hermitian(self, rng: np.random.Generator) -> None:
        gram = gram_matrix([random_state(3, rng) for _ in range(4)])
        assert np.allclose(gram, gram.conj().T)
        assert np.allclose(np.diag(gram), 1.0)
        assert is_psd(gram)

    def test_gram_matrix_checks_dims(self) -> None:
        with pytest.raises(DimensionError):
            gram_matrix([StateVector.basis(2, 0), StateVector.basis(3, 0)])

    def test_psd_factor_rejects_indefinite(self) -> None:
        indefinite = np.array([[1.0, 2.0], [2.0, 1.0]])
        assert not is_psd(indefinite)
        with pytest.raises(ArgumentError, match="not PSD"):
            psd_factor(indefinite)

    def test_unitary_from_pairs(self, rng: np.random.Generator) -> None:
        sources = [random_state(4, rng) for _ in range(3)]
        hidden = random_unitary(4, rng)
        targets = [hidden.apply(state) for state in sources]
        found = unitary_from_pairs(sources, targets)
        for source, target in zip(sources, targets):
            image = found.apply(source).amplitudes
            assert np.allclose(image, target.amplitudes, atol=1e-10)

    def test_unitary_from_dependent_pairs(self) -> None:
        plus = StateVector.from_amplitudes([1, 1])
        found = unitary_from_pairs([plus, plus], [StateVector.basis(2, 1)] * 2)
        assert found.apply(plus).basis_index() == 1

    def test_unitary_from_pairs_rejects_gram_mismatch(self) -> None:
        zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        with pytest.raises(IsometryError, match="differ"):
            unitary_from_pairs([zero, one], [zero, zero])


class TestLinearExtensionMap:
    def test_annihilates_complement(self) -> None:
        zero, one = StateVector.basis(3, 0), StateVector.basis(3, 1)
        extension = LinearExtensionMap([zero], [one])
        assert np.allclose(extension.apply(np.array([0, 0, 1])), 0.0)
        assert extension.rank == 1
        with pytest.raises(IsometryError, match="not in the domain"):
            extension.apply_state(StateVector.basis(3, 2))

    def test_inverse_apply(self, rng: np.random.Generator) -> None:
        domain = [StateVector.basis(3, k) for k in range(3)]
        images = [StateVector(column) for column in random_unitary(3, rng).entries.T]
        extension = LinearExtensionMap(domain, images)
        state = random_state(3, rng)
        recovered = extension.inverse_apply(extension.apply(state))
        assert np.allclose(recovered, state.amplitudes, atol=1e-12)

    def test_rejects_non_orthonormal_domain(self) -> None:
        plus = StateVector.from_amplitudes([1, 1])
        zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        with pytest.raises(ArgumentError, match="domain is not orthonormal"):
            LinearExtensionMap([zero, plus], [zero, one])

    def test_rejects_length_mismatch(self) -> None:
        zero = StateVector.basis(2, 0)
        with pytest.raises(ArgumentError, match="as many images"):
            LinearExtensionMap([zero], [])


class TestTolerances:
    def test_defaults(self) -> None:
        assert get_current_tolerances() is DEFAULT_TOLERANCES
        assert DEFAULT_TOLERANCES.norm == 1e-10
        assert DEFAULT_TOLERANCES.max_total_dim == 2**20

    def test_context_manager_nests(self) -> None:
        with Tolerances(norm=1e-3) as outer:
            with Tolerances(norm=1e-6) as inner:
                assert get_current_tolerances() is inner
            assert get_current_tolerances() is outer
            assert StateVector([1.0001, 0.0]).dim == 2
        assert get_current_tolerances() is DEFAULT_TOLERANCES

    def test_uninstall_out_of_order(self) -> None:
        outer, inner = Tolerances(), Tolerances()
        outer.install_globally()
        inner.install_globally()
        with pytest.warns(InconsistentToleranceInstalls):
            outer.uninstall_globally()
        assert get_current_tolerances() is DEFAULT_TOLERANCES

    def test_uninstall_without_install(self) -> None:
        with pytest.raises(RuntimeError, match="aren't installed"):
            Tolerances().uninstall_globally()

    def test_racing_installs_of_one_object(self) -> None:
        tol = Tolerances(norm=1e-6)
        barrier = threading.Barrier(8)
        outcomes: list[bool] = []

        def install() -> None:
            barrier.wait()
            try:
                tol.install_globally()
            except RuntimeError:
                outcomes.append(False)
            else:
                outcomes.append(True)

        workers = [threading.Thread(target=install) for _ in range(8)]
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()
        assert sorted(outcomes) == [False] * 7 + [True]
        assert get_current_tolerances() is tol
        tol.uninstall_globally()
        assert get_current_tolerances() is DEFAULT_TOLERANCES

    def test_workers_see_installed_tolerances(self) -> None:
        with Tolerances(max_total_dim=64) as tol:
            with ThreadPoolExecutor(max_workers=4) as executor:
                seen = list(executor.map(lambda _: get_current_tolerances(), range(16)))
        assert all(current is tol for current in seen)
        assert get_current_tolerances() is DEFAULT_TOLERANCES

    def test_rejects_non_positive(self) -> None:
        with pytest.raises(ArgumentError, match="gram must be positive"):
            Tolerances(gram=0.0)

    def test_replace(self) -> None:
        tol = DEFAULT_TOLERANCES.replace(max_total_dim=16.0, norm=1e-4)
        assert tol.max_total_dim == 16
        assert isinstance(tol.max_total_dim, int)
        assert tol.norm == 1e-4
        assert tol.gram == DEFAULT_TOLERANCES.gram
        with pytest.raises(ArgumentError, match="unknown tolerance"):
            tol.replace(nrom=1e-4)

    def test_names(self) -> None:
        assert "periodicity" in Tolerances.names()
        assert "install_globally" not in Tolerances.names()


class TestSerialization:
    def test_state_survives_json(self, rng: np.random.Generator) -> None:
        state = random_state(5, rng)
        text = json.dumps(to_jsonable(state))
        assert state_from_json(json.loads(text)) == state

    def test_unitary_survives_json(self, rng: np.random.Generator) -> None:
        unitary = random_unitary(3, rng)
        text = json.dumps(to_jsonable(unitary))
        assert unitary_from_json(json.loads(text)) == unitary

    def test_numpy_scalars_and_spaces(self) -> None:
        space = CompositeSpace([2, 3])
        data = {"x": np.float64(0.25), "n": np.int64(3), "space": space}
        assert to_jsonable(data) == {"x": 0.25, "n": 3, "space": [2, 3]}

    def test_unknown_type(self) -> None:
        with pytest.raises(TypeError, match="cannot convert"):
            to_jsonable(object())

    def test_malformed_state(self) -> None:
        with pytest.raises(ArgumentError, match="not a complex number"):
            state_from_json([[1.0, 0.0, 0.0]])
        with pytest.raises(ArgumentError, match="not normalized"):
            state_from_json([1.0, 1.0])
        assert state_from_json([1.0, 1.0], normalize=True).dim == 2
