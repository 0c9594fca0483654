# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Gram matrices, PSD factors and unitary completion."""

from __future__ import annotations

import logging
import typing as t

import numpy as np
from scipy.linalg import LinAlgError, cholesky, null_space

from ._errors import ArgumentError, DimensionError, IsometryError
from ._states import StateVector, UnitaryMatrix
from ._tolerances import get_current_tolerances

__all__ = (
    "gram_matrix",
    "is_psd",
    "orthonormal_complement",
    "psd_factor",
    "unitary_from_pairs",
)

LOG = logging.getLogger(__name__)


def _columns(vectors: t.Sequence[StateVector | np.ndarray]) -> np.ndarray:
    if not vectors:
        raise ArgumentError("need at least one vector")
    arrays = [np.asarray(vector, dtype=complex) for vector in vectors]
    dims = {array.size for array in arrays}
    if len(dims) != 1:
        raise DimensionError(f"vectors of different dimensions: {sorted(dims)}")
    return np.stack(arrays, axis=1)


def gram_matrix(vectors: t.Sequence[StateVector | np.ndarray]) -> np.ndarray:
    """Return the matrix G with G_ij = ⟨v_i|v_j⟩.

    Example:

        >>> zero, one = StateVector.basis(2, 0), StateVector.basis(2, 1)
        >>> gram_matrix([zero, one]).real.tolist()
        [[1.0, 0.0], [0.0, 1.0]]
    """
    columns = _columns(vectors)
    return columns.conj().T @ columns


def is_psd(matrix: np.ndarray, floor: float | None = None) -> bool:
    """Check whether a Hermitian matrix is positive semidefinite.

    Eigenvalues down to ``-floor`` are accepted. The default floor is
    `Tolerances.psd_floor`.
    """
    if floor is None:
        floor = get_current_tolerances().psd_floor
    matrix = np.asarray(matrix)
    hermitian = 0.5 * (matrix + matrix.conj().T)
    return bool(np.linalg.eigvalsh(hermitian)[0] >= -floor)


def psd_factor(gram: np.ndarray) -> np.ndarray:
    """Return a square matrix *L* with L L† = *gram*.

    A Cholesky factorization is tried first. Singular matrices, which
    Cholesky rejects, are factorized through their eigendecomposition
    with negative rounding noise clipped to zero. In that case, *L* is
    not triangular.

    Raises:
        ArgumentError: if *gram* has an eigenvalue below
            ``-Tolerances.psd_floor``.

    Example:

        >>> gram = np.array([[1.0, 0.5], [0.5, 1.0]])
        >>> factor = psd_factor(gram)
        >>> np.allclose(factor @ factor.conj().T, gram)
        True
        >>> singular = psd_factor(np.ones((2, 2)))
        >>> np.allclose(singular @ singular.conj().T, np.ones((2, 2)))
        True
    """
    gram = np.asarray(gram, dtype=complex)
    gram = 0.5 * (gram + gram.conj().T)
    try:
        return cholesky(gram, lower=True)
    except LinAlgError:
        LOG.debug("Cholesky failed, falling back to eigendecomposition")
    eigenvalues, eigenvectors = np.linalg.eigh(gram)
    if eigenvalues[0] < -get_current_tolerances().psd_floor:
        raise ArgumentError(f"matrix is not PSD: eigenvalue {eigenvalues[0]:.3g}")
    return eigenvectors * np.sqrt(np.clip(eigenvalues, 0.0, None))


def orthonormal_complement(columns: np.ndarray) -> np.ndarray:
    """Return an orthonormal basis of the complement of span(*columns*).

    The basis vectors are the columns of the result. If *columns* spans
    the whole space, the result has zero columns.
    """
    columns = np.asarray(columns, dtype=complex)
    return null_space(columns.conj().T)


def _polar_isometry(matrix: np.ndarray) -> np.ndarray:
    left, _, right = np.linalg.svd(matrix, full_matrices=False)
    return left @ right


def unitary_from_pairs(
    sources: t.Sequence[StateVector | np.ndarray],
    targets: t.Sequence[StateVector | np.ndarray],
) -> UnitaryMatrix:
    """Find a unitary W with W|source_i⟩ = |target_i⟩ for all *i*.

    Such a unitary exists iff both families have the same Gram matrix.
    The sources need not be linearly independent. The unitary maps the
    span of the sources onto the span of the targets and fills up the
    rest with an arbitrary isometry between the orthogonal complements.

    Raises:
        DimensionError: if the families have different lengths or live
            in spaces of different dimension.
        IsometryError: if the Gram matrices differ by more than
            `Tolerances.gram` in any entry.

    Example:

        >>> plus = StateVector.from_amplitudes([1, 1])
        >>> w = unitary_from_pairs([StateVector.basis(2, 0)], [plus])
        >>> np.allclose(w.apply(StateVector.basis(2, 0)).amplitudes, plus.amplitudes)
        True
    """
    source_columns = _columns(sources)
    target_columns = _columns(targets)
    if source_columns.shape != target_columns.shape:
        raise DimensionError(
            f"cannot map {source_columns.shape[1]} vectors of dim "
            f"{source_columns.shape[0]} onto {target_columns.shape[1]} "
            f"vectors of dim {target_columns.shape[0]}"
        )
    tol = get_current_tolerances()
    source_gram = source_columns.conj().T @ source_columns
    target_gram = target_columns.conj().T @ target_columns
    deviation = float(np.max(np.abs(source_gram - target_gram)))
    if deviation > tol.gram:
        raise IsometryError(f"Gram matrices differ by {deviation:.3g}")
    hermitian = 0.5 * (source_gram + source_gram.conj().T)
    eigenvalues, eigenvectors = np.linalg.eigh(hermitian)
    support = eigenvalues > tol.gram
    scale = np.sqrt(eigenvalues[support])
    source_frame = source_columns @ eigenvectors[:, support] / scale
    target_frame = target_columns @ eigenvectors[:, support] / scale
    # Both frames are orthonormal up to rounding; snap them onto the
    # nearest isometry so that the result passes the unitarity check.
    source_frame = _polar_isometry(source_frame)
    target_frame = _polar_isometry(target_frame)
    source_rest = orthonormal_complement(source_frame)
    target_rest = orthonormal_complement(target_frame)
    matrix = (
        target_frame @ source_frame.conj().T + target_rest @ source_rest.conj().T
    )
    LOG.debug(
        "completed rank-%d map to a %d-dim unitary", np.sum(support), matrix.shape[0]
    )
    return UnitaryMatrix(matrix)
