# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Culling of replicas and ancilla-assisted cloning.

A culler that removes the second of two replicas works on basis states,
but by linearity it cannot work on their superpositions
(`make_basis_culler()`, `cull_gap()`). The information it appears to
delete has only been moved, which `CullGapReport.recovery_residual`
demonstrates by undoing the culler.

`jozsa_clonability_check()` decides when an ancilla makes cloning
possible after all.
"""

from ._culler import BasisCuller, CullGapReport, cull_gap, make_basis_culler
from ._jozsa import (
    ORTHOGONALITY_THRESHOLD,
    DomainError,
    GramFeasibility,
    jozsa_clonability_check,
)

__all__ = (
    "ORTHOGONALITY_THRESHOLD",
    "BasisCuller",
    "CullGapReport",
    "DomainError",
    "GramFeasibility",
    "cull_gap",
    "jozsa_clonability_check",
    "make_basis_culler",
)
