# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Immutable value types: states, unitaries, density matrices, spaces."""

from __future__ import annotations

import cmath
import logging
import math
import typing as t

import numpy as np

from ._errors import ArgumentError, CapacityError, DimensionError
from ._tolerances import get_current_tolerances

__all__ = (
    "CompositeSpace",
    "DensityMatrix",
    "HADAMARD",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "StateVector",
    "UnitaryMatrix",
    "check_capacity",
    "qubit_unitary",
)

LOG = logging.getLogger(__name__)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex)
    if not np.all(np.isfinite(array)):
        raise ArgumentError(f"entries must be finite: {array.tolist()}")
    array.flags.writeable = False
    return array


def check_capacity(total_dim: int, what: str = "state") -> None:
    """Raise `CapacityError` if *total_dim* exceeds the configured limit."""
    limit = get_current_tolerances().max_total_dim
    if total_dim > limit:
        raise CapacityError(f"{what} needs {total_dim} amplitudes, limit is {limit}")


class StateVector:
    """A normalized vector of complex amplitudes.

    Args:
        amplitudes: The amplitudes in the computational basis. These
            are copied and the copy is made read-only.

    Raises:
        ArgumentError: if *amplitudes* is empty, not one-dimensional,
            not finite, or its norm deviates from 1 by more than
            `Tolerances.norm`.

    States compare by value:

        >>> StateVector([1, 0]) == StateVector.basis(2, 0)
        True
        >>> StateVector([0.6, 0.8j]).dim
        2
        >>> StateVector([1, 1])
        Traceback (most recent call last):
        ...
        qspecies.hilbert._errors.ArgumentError: state is not normalized: norm ...
    """

    __slots__ = ("_amplitudes",)

    def __init__(self, amplitudes: t.Iterable[complex] | np.ndarray) -> None:
        array = _frozen(np.asarray(amplitudes))
        if array.ndim != 1 or array.size == 0:
            raise ArgumentError(
                f"expected a non-empty 1D array, got shape {array.shape}"
            )
        norm = float(np.linalg.norm(array))
        if not abs(norm - 1.0) <= get_current_tolerances().norm:
            raise ArgumentError(f"state is not normalized: norm {norm!r}")
        self._amplitudes = array

    @classmethod
    def from_amplitudes(
        cls, amplitudes: t.Iterable[complex] | np.ndarray, *, normalize: bool = True
    ) -> StateVector:
        """Create a state, rescaling the amplitudes if necessary.

        Raises:
            ArgumentError: if all amplitudes are zero.
        """
        array = np.asarray(amplitudes, dtype=complex)
        norm = float(np.linalg.norm(array))
        if not np.isfinite(norm):
            raise ArgumentError(f"amplitudes must be finite: {array.tolist()}")
        if norm == 0.0:
            raise ArgumentError("cannot normalize the zero vector")
        if normalize:
            array = array / norm
        return cls(array)

    @classmethod
    def basis(cls, dim: int, index: int) -> StateVector:
        """The computational basis state |*index*⟩ of dimension *dim*."""
        if not 0 <= index < dim:
            raise ArgumentError(f"basis index {index} out of range for dim {dim}")
        array = np.zeros(dim, dtype=complex)
        array[index] = 1.0
        return cls(array)

    @property
    def dim(self) -> int:
        """The dimension of the Hilbert space."""
        return self._amplitudes.size

    @property
    def amplitudes(self) -> np.ndarray:
        """The read-only array of amplitudes."""
        return self._amplitudes

    def basis_index(self) -> int | None:
        """Return *k* if this is |k⟩ up to a global phase, else None."""
        index = int(np.argmax(np.abs(self._amplitudes)))
        if abs(abs(self._amplitudes[index]) - 1.0) <= get_current_tolerances().norm:
            return index
        return None

    def __array__(self, dtype: t.Any = None, copy: t.Any = None) -> np.ndarray:
        return np.array(self._amplitudes, dtype=dtype)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StateVector):
            return np.array_equal(self._amplitudes, other._amplitudes)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._amplitudes.tobytes())

    def __repr__(self) -> str:
        text = np.array2string(self._amplitudes, separator=", ")
        return f"{type(self).__name__}({text})"


class UnitaryMatrix:
    """A square complex matrix with U†U = UU† = I.

    Args:
        entries: The matrix entries. These are copied and the copy is
            made read-only.

    Raises:
        ArgumentError: if *entries* is not square or not unitary within
            `Tolerances.unitary`.

    Example:

        >>> x = UnitaryMatrix([[0, 1], [1, 0]])
        >>> x.apply(StateVector.basis(2, 0)) == StateVector.basis(2, 1)
        True
        >>> UnitaryMatrix([[1, 1], [0, 1]])
        Traceback (most recent call last):
        ...
        qspecies.hilbert._errors.ArgumentError: matrix is not unitary ...
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: t.Iterable[t.Iterable[complex]] | np.ndarray) -> None:
        matrix = _frozen(np.asarray(entries))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or not matrix.size:
            raise ArgumentError(f"expected a square matrix, got shape {matrix.shape}")
        identity = np.eye(matrix.shape[0])
        deviation = max(
            np.max(np.abs(matrix.conj().T @ matrix - identity)),
            np.max(np.abs(matrix @ matrix.conj().T - identity)),
        )
        if not deviation <= get_current_tolerances().unitary:
            raise ArgumentError(f"matrix is not unitary: deviation {deviation:.3g}")
        self._entries = matrix

    @classmethod
    def identity(cls, dim: int) -> UnitaryMatrix:
        """The identity on a space of dimension *dim*."""
        return cls(np.eye(dim))

    @property
    def dim(self) -> int:
        """The dimension of the space this acts on."""
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """The read-only matrix entries."""
        return self._entries

    def dagger(self) -> UnitaryMatrix:
        """The adjoint U†, which is also the inverse."""
        return UnitaryMatrix(self._entries.conj().T)

    def power(self, exponent: int) -> UnitaryMatrix:
        """Return U to the given integer power."""
        if exponent < 0:
            return self.dagger().power(-exponent)
        return UnitaryMatrix(np.linalg.matrix_power(self._entries, exponent))

    def apply(self, state: StateVector) -> StateVector:
        """Return U|state⟩.

        Raises:
            DimensionError: if the dimensions don't match.
        """
        if state.dim != self.dim:
            raise DimensionError(
                f"cannot apply {self.dim}-dim unitary to {state.dim}-dim state"
            )
        return StateVector(self._entries @ state.amplitudes)

    def expectation(self, state: StateVector) -> complex:
        """Return ⟨state|U|state⟩."""
        if state.dim != self.dim:
            raise DimensionError(
                f"cannot apply {self.dim}-dim unitary to {state.dim}-dim state"
            )
        return complex(np.vdot(state.amplitudes, self._entries @ state.amplitudes))

    def __array__(self, dtype: t.Any = None, copy: t.Any = None) -> np.ndarray:
        return np.array(self._entries, dtype=dtype)

    def __matmul__(self, other: UnitaryMatrix) -> UnitaryMatrix:
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionError(f"cannot multiply {self.dim}-dim and {other.dim}-dim")
        return UnitaryMatrix(self._entries @ other._entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UnitaryMatrix):
            return np.array_equal(self._entries, other._entries)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._entries.tobytes())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._entries.tolist()!r})"


class DensityMatrix:
    """A Hermitian, positive semidefinite matrix with unit trace.

    Raises:
        ArgumentError: if any of these three properties is violated
            beyond `Tolerances.density` and `Tolerances.eigen_floor`.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: t.Iterable[t.Iterable[complex]] | np.ndarray) -> None:
        matrix = _frozen(np.asarray(entries))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or not matrix.size:
            raise ArgumentError(f"expected a square matrix, got shape {matrix.shape}")
        tol = get_current_tolerances()
        if np.max(np.abs(matrix - matrix.conj().T)) > tol.density:
            raise ArgumentError("density matrix is not Hermitian")
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > tol.density:
            raise ArgumentError(f"density matrix has trace {trace!r}")
        lowest = float(np.linalg.eigvalsh(matrix)[0])
        if lowest < -tol.eigen_floor:
            raise ArgumentError(f"density matrix has negative eigenvalue {lowest!r}")
        self._entries = matrix

    @classmethod
    def from_state(cls, state: StateVector) -> DensityMatrix:
        """The projector |state⟩⟨state|."""
        return cls(np.outer(state.amplitudes, state.amplitudes.conj()))

    @property
    def dim(self) -> int:
        """The dimension of the space this acts on."""
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """The read-only matrix entries."""
        return self._entries

    def eigenvalues(self) -> np.ndarray:
        """The eigenvalues in ascending order, clipped to [0, 1]."""
        return np.clip(np.linalg.eigvalsh(self._entries), 0.0, 1.0)

    def __array__(self, dtype: t.Any = None, copy: t.Any = None) -> np.ndarray:
        return np.array(self._entries, dtype=dtype)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._entries.tolist()!r})"


class CompositeSpace:
    """Bookkeeping for a tensor product of finite-dimensional factors.

    Amplitudes are ordered row-major: the leftmost factor is the most
    significant index.

        >>> space = CompositeSpace([2, 3, 2])
        >>> space.total_dim
        12
        >>> space
        CompositeSpace(2, 3, 2)

    Raises:
        ArgumentError: if there are no factors or a factor has dimension
            less than one.
        CapacityError: if the product of all factors exceeds
            `Tolerances.max_total_dim`.
    """

    __slots__ = ("_factor_dims",)

    def __init__(self, factor_dims: t.Iterable[int]) -> None:
        dims = tuple(int(dim) for dim in factor_dims)
        if not dims or min(dims) < 1:
            raise ArgumentError(f"factor dimensions must be positive: {dims}")
        check_capacity(math.prod(dims), "space")
        self._factor_dims = dims

    @property
    def factor_dims(self) -> tuple[int, ...]:
        """The dimension of each factor, left to right."""
        return self._factor_dims

    @property
    def total_dim(self) -> int:
        """The product of all factor dimensions."""
        return math.prod(self._factor_dims)

    def __len__(self) -> int:
        return len(self._factor_dims)

    def check_slot(self, slot: int) -> int:
        """Return *slot* if it is a valid factor index.

        Raises:
            DimensionError: if it isn't.
        """
        if not 0 <= slot < len(self._factor_dims):
            raise DimensionError(f"slot {slot} out of range for {len(self)} factors")
        return slot

    def check_state(self, state: StateVector | np.ndarray) -> None:
        """Raise `DimensionError` unless *state* lives in this space."""
        size = state.dim if isinstance(state, StateVector) else np.size(state)
        if size != self.total_dim:
            raise DimensionError(f"state of dim {size} does not fit into {self!r}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CompositeSpace):
            return self._factor_dims == other._factor_dims
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._factor_dims)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(map(str, self._factor_dims))})"


def qubit_unitary(a: complex, b: complex) -> UnitaryMatrix:
    """The qubit unitary with U|0⟩ = a|0⟩ + b|1⟩ and U|1⟩ = a*|1⟩ − b*|0⟩.

    Raises:
        ArgumentError: if an amplitude is not finite, or if |a|² + |b|²
            deviates from 1 by more than `Tolerances.norm`.

    Example:

        >>> u = qubit_unitary(0, 1)
        >>> u.entries.real.tolist()
        [[0.0, -1.0], [1.0, 0.0]]
    """
    a, b = complex(a), complex(b)
    if not (cmath.isfinite(a) and cmath.isfinite(b)):
        raise ArgumentError(f"amplitudes must be finite: {a!r}, {b!r}")
    weight = abs(a) ** 2 + abs(b) ** 2
    if not abs(weight - 1.0) <= get_current_tolerances().norm:
        raise ArgumentError(f"|a|² + |b|² must be 1, got {weight!r}")
    return UnitaryMatrix([[a, -b.conjugate()], [b, a.conjugate()]])


PAULI_X = UnitaryMatrix([[0, 1], [1, 0]])
PAULI_Y = UnitaryMatrix([[0, -1j], [1j, 0]])
PAULI_Z = UnitaryMatrix([[1, 0], [0, -1]])
HADAMARD = UnitaryMatrix(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
