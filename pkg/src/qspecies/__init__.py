# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Numerical experiments on self-replicating quantum organisms.

The package is split by topic:

- `qspecies.hilbert`: states, unitaries, tensor products and the
  numeric tolerances that all other parts share;
- `qspecies.replication`: cloning of basis states, its failure on
  superpositions, probabilistic cloning and periodic copyability;
- `qspecies.culling`: deletion of replicas and ancilla-assisted
  cloning;
- `qspecies.mutation`: the entangled mutation of one copy among many;
- `qspecies.cli`: the ``qspecies`` command.

The subpackages are not imported automatically.
"""

from importlib.metadata import PackageNotFoundError, version

__all__ = ("__version__",)

try:
    __version__ = version("qspecies")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0+unknown"
