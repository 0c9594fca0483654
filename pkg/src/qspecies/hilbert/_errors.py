# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Exceptions shared by all subpackages."""

__all__ = (
    "ArgumentError",
    "CapacityError",
    "DimensionError",
    "IsometryError",
    "QSpeciesError",
)


class QSpeciesError(Exception):
    """Base class of all errors raised by this package."""


class DimensionError(QSpeciesError, ValueError):
    """The dimensions of two operands do not fit together."""


class ArgumentError(QSpeciesError, ValueError):
    """An argument is outside of the domain of an operation."""


class CapacityError(QSpeciesError, MemoryError):
    """A state would have more amplitudes than the configured maximum.

    The limit is `Tolerances.max_total_dim`.
    """


class IsometryError(QSpeciesError, ArithmeticError):
    """A set of images that should be orthonormal is not."""
