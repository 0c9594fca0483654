# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Exceptions specific to replication."""

from qspecies.hilbert import QSpeciesError

__all__ = (
    "DegenerateInputError",
    "InfeasibleError",
)


class DegenerateInputError(QSpeciesError, ValueError):
    """Two input states are linearly dependent.

    Probabilistic replication needs linearly independent inputs. For
    dependent ones, the success probability is not defined.
    """


class InfeasibleError(QSpeciesError, ArithmeticError):
    """No physical process realizes the requested transformation.

    Typically, a success probability was requested that exceeds the
    largest one compatible with unitarity.
    """
