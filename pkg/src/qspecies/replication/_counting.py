# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Counting equations against unknowns of a self-replicating system."""

from __future__ import annotations

import dataclasses

from qspecies.hilbert import ArgumentError

__all__ = (
    "WignerCount",
    "wigner_count",
)


@dataclasses.dataclass(frozen=True)
class WignerCount:
    """Real equations and unknowns of the replication condition.

    A self-replicating organism of dimension *n* that feeds on a
    nutrient and leaves behind a rejected part of dimension *r* must
    satisfy ``2 n² r`` real equations. The free parameters are the
    organism, the rejected part and the nutrient, which make
    ``2 (n + r + n r)`` real unknowns.

    Attributes:
        n: Dimension of the organism.
        r: Dimension of the rejected part.
        equations: Number of real equations.
        unknowns: Number of real unknowns.
        deficit: Equations minus unknowns. A positive deficit means the
            system is over-determined and a solution would be a
            coincidence.
    """

    n: int
    r: int
    equations: int
    unknowns: int
    deficit: int

    @property
    def overdetermined(self) -> bool:
        """True if there are more equations than unknowns."""
        return self.deficit > 0


def wigner_count(n: int, r: int) -> WignerCount:
    """Count equations and unknowns for the given dimensions.

    Raises:
        ArgumentError: if *n* or *r* is less than one.

    Example:

        >>> wigner_count(3, 2)
        WignerCount(n=3, r=2, equations=36, unknowns=22, deficit=14)
        >>> wigner_count(1, 1).deficit
        -4
    """
    if n < 1 or r < 1:
        raise ArgumentError(f"dimensions must be positive: n={n}, r={r}")
    equations = 2 * n * n * r
    unknowns = 2 * (n + r + n * r)
    return WignerCount(n, r, equations, unknowns, equations - unknowns)
