# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Copying quantum organisms, and why it mostly fails.

This package covers:

- counting the equations a self-replicating system must satisfy
  (`wigner_count()`);
- the linear cloner of basis states and the gap between its output and
  a true copy for superpositions (`make_basis_cloner()`, `clone_gap()`);
- the inner-product argument against cloning two non-orthogonal states
  (`nonorthogonal_unitarity_violation()`);
- probabilistic cloning of two linearly independent states
  (`duan_guo_max_probability()`, `build_prob_clone_machine()`,
  `sample_prob_clone()`);
- periodic evolutions whose state can be copied once per period
  (`cyclic_replication_demo()`).
"""

from ._cloner import (
    BasisCloner,
    CloneGapReport,
    clone_gap,
    make_basis_cloner,
    nonorthogonal_unitarity_violation,
    required_rejected_overlap,
)
from ._counting import WignerCount, wigner_count
from ._cyclic import (
    CyclicPoint,
    cyclic_replication_demo,
    periodic_unitary,
    periodicity_residual,
)
from ._errors import DegenerateInputError, InfeasibleError
from ._probabilistic import (
    DuanGuoOptimum,
    MachineResiduals,
    ProbCloneMachine,
    ProbCloneSample,
    build_prob_clone_machine,
    canonical_pair,
    duan_guo_bound,
    duan_guo_max_probability,
    duan_guo_search,
    sample_prob_clone,
)

__all__ = (
    "BasisCloner",
    "CloneGapReport",
    "CyclicPoint",
    "DegenerateInputError",
    "DuanGuoOptimum",
    "InfeasibleError",
    "MachineResiduals",
    "ProbCloneMachine",
    "ProbCloneSample",
    "WignerCount",
    "build_prob_clone_machine",
    "canonical_pair",
    "clone_gap",
    "cyclic_replication_demo",
    "duan_guo_bound",
    "duan_guo_max_probability",
    "duan_guo_search",
    "make_basis_cloner",
    "nonorthogonal_unitarity_violation",
    "periodic_unitary",
    "periodicity_residual",
    "required_rejected_overlap",
    "sample_prob_clone",
    "wigner_count",
)
