# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Finite-dimensional Hilbert spaces.

This package provides the dense state-vector machinery that all other
parts of `qspecies` build on: immutable states and unitaries, tensor
products with explicit factor bookkeeping, partial traces and
entanglement diagnostics.

Amplitudes are ordered row-major, i.e. in |a⟩⊗|b⟩ the index of *a* is
the more significant one. All checks run against the currently
installed `Tolerances`.
"""

from ._errors import (
    ArgumentError,
    CapacityError,
    DimensionError,
    IsometryError,
    QSpeciesError,
)
from ._extension import LinearExtensionMap
from ._linalg import (
    gram_matrix,
    is_psd,
    orthonormal_complement,
    psd_factor,
    unitary_from_pairs,
)
from ._ops import (
    Seed,
    apply_on_factor,
    entanglement_entropy,
    inner_product,
    partial_trace,
    purity,
    random_state,
    random_unitary,
    reduced_amplitudes,
    tensor,
    tensor_power,
    von_neumann_entropy,
)
from ._serialize import (
    complex_from_json,
    state_from_json,
    to_jsonable,
    unitary_from_json,
)
from ._states import (
    HADAMARD,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    CompositeSpace,
    DensityMatrix,
    StateVector,
    UnitaryMatrix,
    check_capacity,
    qubit_unitary,
)
from ._tolerances import (
    DEFAULT_TOLERANCES,
    InconsistentToleranceInstalls,
    Tolerances,
    get_current_tolerances,
)

__all__ = (
    "DEFAULT_TOLERANCES",
    "HADAMARD",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "ArgumentError",
    "CapacityError",
    "CompositeSpace",
    "DensityMatrix",
    "DimensionError",
    "InconsistentToleranceInstalls",
    "IsometryError",
    "LinearExtensionMap",
    "QSpeciesError",
    "Seed",
    "StateVector",
    "Tolerances",
    "UnitaryMatrix",
    "apply_on_factor",
    "check_capacity",
    "complex_from_json",
    "entanglement_entropy",
    "get_current_tolerances",
    "gram_matrix",
    "inner_product",
    "is_psd",
    "orthonormal_complement",
    "partial_trace",
    "psd_factor",
    "purity",
    "qubit_unitary",
    "random_state",
    "random_unitary",
    "reduced_amplitudes",
    "state_from_json",
    "tensor",
    "tensor_power",
    "to_jsonable",
    "unitary_from_json",
    "unitary_from_pairs",
    "von_neumann_entropy",
)
