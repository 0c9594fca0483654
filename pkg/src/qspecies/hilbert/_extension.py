# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Linear maps defined by their action on an orthonormal set."""

from __future__ import annotations

import typing as t

import numpy as np

from ._errors import ArgumentError, DimensionError, IsometryError
from ._linalg import gram_matrix
from ._states import StateVector
from ._tolerances import get_current_tolerances

__all__ = ("LinearExtensionMap",)


class LinearExtensionMap:
    """The linear extension of a map on an orthonormal set.

    Given orthonormal *domain* vectors |d_i⟩ and *images* |e_i⟩, this is
    the operator V = Σ_i |e_i⟩⟨d_i|. It agrees with the prescribed map
    on every |d_i⟩, acts linearly on their superpositions and annihilates
    everything orthogonal to the domain. If the images are orthonormal,
    V is an isometry on the span of the domain.

    Args:
        domain: Orthonormal vectors of the input space.
        images: One vector of the output space for each domain vector.

    Raises:
        ArgumentError: if the two lists have different lengths or are
            empty, or if the domain is not orthonormal.
        IsometryError: if the images are not orthonormal. Both checks
            use `Tolerances.gram`.

    Example:

        >>> zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        >>> flip = LinearExtensionMap([zero, one], [one, zero])
        >>> flip.apply_state(zero) == one
        True
        >>> flip.apply(np.array([2.0, 0.0])).real.tolist()
        [0.0, 2.0]
        >>> LinearExtensionMap([zero, one], [zero, zero])
        Traceback (most recent call last):
        ...
        qspecies.hilbert._errors.IsometryError: images are not orthonormal ...
    """

    __slots__ = ("_matrix", "_rank")

    def __init__(
        self,
        domain: t.Sequence[StateVector | np.ndarray],
        images: t.Sequence[StateVector | np.ndarray],
    ) -> None:
        if not domain or len(domain) != len(images):
            raise ArgumentError(
                f"need as many images as domain vectors, got "
                f"{len(images)} and {len(domain)}"
            )
        tol = get_current_tolerances().gram
        identity = np.eye(len(domain))
        deviation = np.max(np.abs(gram_matrix(domain) - identity))
        if deviation > tol:
            raise ArgumentError(f"domain is not orthonormal: deviation {deviation:.3g}")
        deviation = np.max(np.abs(gram_matrix(images) - identity))
        if deviation > tol:
            raise IsometryError(
                f"images are not orthonormal: deviation {deviation:.3g}"
            )
        sources = np.stack([np.asarray(vector, dtype=complex) for vector in domain], 1)
        targets = np.stack([np.asarray(vector, dtype=complex) for vector in images], 1)
        matrix = targets @ sources.conj().T
        matrix.flags.writeable = False
        self._matrix = matrix
        self._rank = len(domain)

    @property
    def matrix(self) -> np.ndarray:
        """The read-only matrix of V, of shape (output dim, input dim)."""
        return self._matrix

    @property
    def input_dim(self) -> int:
        """Dimension of the input space."""
        return self._matrix.shape[1]

    @property
    def output_dim(self) -> int:
        """Dimension of the output space."""
        return self._matrix.shape[0]

    @property
    def rank(self) -> int:
        """Number of domain vectors."""
        return self._rank

    def apply(self, vector: np.ndarray | StateVector) -> np.ndarray:
        """Return V|vector⟩ without any normalization.

        The input may be any vector of the input space, normalized or
        not. Components outside the domain are annihilated, so the
        norm of the result measures how much of the input lies in the
        domain.
        """
        array = np.asarray(vector, dtype=complex)
        if array.shape != (self.input_dim,):
            raise DimensionError(
                f"expected vector of dim {self.input_dim}, got {array.shape}"
            )
        return self._matrix @ array

    def apply_state(self, state: StateVector) -> StateVector:
        """Return V|state⟩ as a state.

        Raises:
            IsometryError: if *state* does not lie in the span of the
                domain, so that V does not preserve its norm.
        """
        image = self.apply(state)
        norm = float(np.linalg.norm(image))
        if abs(norm - 1.0) > get_current_tolerances().norm:
            raise IsometryError(f"state is not in the domain: image has norm {norm!r}")
        return StateVector(image)

    def inverse_apply(self, vector: np.ndarray | StateVector) -> np.ndarray:
        """Return V†|vector⟩.

        On the span of the images, this undoes `apply()`.
        """
        array = np.asarray(vector, dtype=complex)
        if array.shape != (self.output_dim,):
            raise DimensionError(
                f"expected vector of dim {self.output_dim}, got {array.shape}"
            )
        return self._matrix.conj().T @ array

    def __repr__(self) -> str:
        return (
            f"<{type(self).__name__}: rank {self._rank}, "
            f"{self.input_dim} -> {self.output_dim}>"
        )
