# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Global, installable numeric tolerances."""

from __future__ import annotations

import dataclasses
import sys
import threading
import warnings
from types import TracebackType

from ._errors import ArgumentError

if sys.version_info < (3, 11):
    from typing_extensions import Self
else:
    from typing import Self

__all__ = (
    "DEFAULT_TOLERANCES",
    "InconsistentToleranceInstalls",
    "Tolerances",
    "get_current_tolerances",
)


class InconsistentToleranceInstalls(Warning):
    """Tolerances have been uninstalled in another order than installed."""


@dataclasses.dataclass(frozen=True, eq=False)
class Tolerances:
    """The numeric tolerances used by all checks of this package.

    Every field has a default, so you only pass the ones you want to
    change. An instance does nothing until it is installed. The easiest
    way to do that is to use it as a :term:`context manager`:

        >>> with Tolerances(norm=1e-6) as tol:
        ...     get_current_tolerances() is tol
        True
        >>> get_current_tolerances().norm
        1e-10

    Installation nests. Each object remembers the one it replaced and
    reinstates it when it is uninstalled. Installing the same object
    twice at the same time is an error:

        >>> tol = Tolerances()
        >>> tol.install_globally()
        >>> tol.install_globally()
        Traceback (most recent call last):
        ...
        RuntimeError: tolerances are already installed
        >>> tol.uninstall_globally()

    The installed tolerances are shared by all threads of the process.
    Install them before starting worker threads and uninstall them after
    joining, so that every worker sees the same values. Installing and
    uninstalling are atomic, but interleaving the `with` blocks of
    several threads unwinds the stack out of order.

    Attributes:
        norm: Allowed deviation of a state's Euclidean norm from 1.
        unitary: Allowed entrywise deviation of U†U and UU† from the
            identity.
        density: Allowed deviation of a density matrix from
            hermiticity and unit trace.
        eigen_floor: Most negative eigenvalue a density matrix may
            have.
        entropy: Entropy below which a bipartition counts as a product.
        gram: Allowed entrywise deviation between two Gram matrices.
        psd_floor: Most negative eigenvalue a Gram matrix may have and
            still count as positive semidefinite.
        periodicity: Allowed deviation of U^T from a multiple of the
            identity in periodic evolutions.
        max_total_dim: Largest number of amplitudes a state may have.
    """

    norm: float = 1e-10
    unitary: float = 1e-10
    density: float = 1e-10
    eigen_floor: float = 1e-9
    entropy: float = 1e-8
    gram: float = 1e-9
    psd_floor: float = 1e-10
    periodicity: float = 1e-8
    max_total_dim: int = 2**20

    def __post_init__(self) -> None:
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not value > 0:
                raise ArgumentError(
                    f"tolerance {field.name} must be positive: {value!r}"
                )
        # Not a field; frozen dataclasses need `object.__setattr__()`.
        object.__setattr__(self, "_parent", None)

    @classmethod
    def names(cls) -> tuple[str, ...]:
        """The names of all configurable tolerances."""
        return tuple(field.name for field in dataclasses.fields(cls))

    def replace(self, **overrides: float) -> Tolerances:
        """Return a copy with some tolerances changed.

        Raises:
            ArgumentError: if a name is not a known tolerance.

        Example:

            >>> Tolerances().replace(gram=1e-6).gram
            1e-06
            >>> Tolerances().replace(foo=1.0)
            Traceback (most recent call last):
            ...
            qspecies.hilbert._errors.ArgumentError: unknown tolerance: 'foo'
        """
        for name in overrides:
            if name not in self.names():
                raise ArgumentError(f"unknown tolerance: {name!r}")
        if "max_total_dim" in overrides:
            overrides["max_total_dim"] = int(overrides["max_total_dim"])
        return dataclasses.replace(self, **overrides)

    def install_globally(self) -> None:
        """Make these the tolerances returned by `get_current_tolerances()`.

        .. note:: Consider using this object as a :term:`context
            manager` instead.

        Raises:
            RuntimeError: if this object already is installed.
        """
        global _current
        with _lock:
            parent = self._parent  # type: ignore[attr-defined]
            if _current is self or parent is not None:
                raise RuntimeError("tolerances are already installed")
            object.__setattr__(self, "_parent", _current)
            _current = self

    def uninstall_globally(self) -> None:
        """Reinstate the tolerances that were current before this one.

        Every call to this method must be matched to a call to
        `install_globally()`.

        Warning:
            If this is not the currently installed object, an
            `InconsistentToleranceInstalls` warning is issued. All
            tolerances installed after this one are uninstalled as well.
        """
        global _current
        with _lock:
            parent: Tolerances | None = self._parent  # type: ignore[attr-defined]
            if parent is None:
                raise RuntimeError("cannot uninstall tolerances that aren't installed")
            previous = _current
            _current = parent
            object.__setattr__(self, "_parent", None)
        if previous is not self:
            warnings.warn(
                f"current tolerances are {previous!r}, but expected {self!r}",
                InconsistentToleranceInstalls,
                stacklevel=2,
            )

    def __enter__(self) -> Self:
        self.install_globally()
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_value: BaseException | None,
        traceback: TracebackType | None,
    ) -> None:
        self.uninstall_globally()


DEFAULT_TOLERANCES = Tolerances()
"""The tolerances used whenever no others are installed."""

_current: Tolerances = DEFAULT_TOLERANCES
_lock = threading.Lock()


def get_current_tolerances() -> Tolerances:
    """Return the currently installed `Tolerances`.

    If none are installed, this is `DEFAULT_TOLERANCES`.
    """
    return _current
