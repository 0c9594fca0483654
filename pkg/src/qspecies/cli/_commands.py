# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""The experiments behind each subcommand.

Every function here takes fully parsed arguments and returns an
`ExperimentRecord`. Parsing of command-line strings happens in the
helpers at the top of this module.
"""

from __future__ import annotations

import itertools
import json
import logging
import typing as t
from pathlib import Path

import numpy as np

from qspecies import __version__
from qspecies.culling import cull_gap, jozsa_clonability_check, make_basis_culler
from qspecies.hilbert import (
    ArgumentError,
    Seed,
    StateVector,
    complex_from_json,
    random_state,
    random_unitary,
)
from qspecies.mutation import (
    canonical_mutation,
    entangling_unitarity_residual,
    paradox_sweep,
    qubit_orthogonal_example,
)
from qspecies.replication import (
    build_prob_clone_machine,
    canonical_pair,
    clone_gap,
    duan_guo_search,
    make_basis_cloner,
    sample_prob_clone,
    wigner_count,
)

from ._records import ExperimentRecord

__all__ = (
    "NORMALIZATION_WARN_THRESHOLD",
    "RESIDUAL_THRESHOLD",
    "cmd_check_entangling_qubit",
    "cmd_check_entangling_random",
    "cmd_clone_demo",
    "cmd_cull_demo",
    "cmd_jozsa_check",
    "cmd_paradox_sweep",
    "cmd_prob_clone",
    "cmd_wigner_count",
    "doubling",
    "parse_amplitudes",
    "parse_grid",
    "parse_int_list",
    "parse_span",
    "uniform_state",
)

LOG = logging.getLogger(__name__)

NORMALIZATION_WARN_THRESHOLD = 1e-6
"""User amplitudes whose norm deviates more than this are reported."""

RESIDUAL_THRESHOLD = 1e-6
"""Residuals above this count as a violation in `cmd_check_entangling_random()`."""


def _record(
    subcommand: str,
    params: dict[str, t.Any],
    results: dict[str, t.Any],
    columns: t.Sequence[str] = (),
) -> ExperimentRecord:
    return ExperimentRecord(
        subcommand=subcommand,
        params=params,
        results=results,
        version=__version__,
        columns=tuple(columns),
    )


def _normalized(amplitudes: t.Sequence[complex]) -> StateVector:
    array = np.asarray(amplitudes, dtype=complex)
    if not np.all(np.isfinite(array)):
        raise ArgumentError(f"amplitudes must be finite: {array.tolist()}")
    norm = float(np.linalg.norm(array))
    if norm and abs(norm - 1.0) > NORMALIZATION_WARN_THRESHOLD:
        LOG.warning("amplitudes have norm %.6g, normalizing them", norm)
    return StateVector.from_amplitudes(array)


def parse_amplitudes(text: str) -> StateVector:
    """Parse comma-separated complex amplitudes like ``1,1j`` or ``0.6+0.8j``.

    The result is normalized. If the norm was off by more than
    `NORMALIZATION_WARN_THRESHOLD`, a warning is logged.

    Raises:
        ArgumentError: if a token is not a complex number or all
            amplitudes are zero.

    Example:

        >>> np.round(parse_amplitudes("3, 4j").amplitudes, 6).tolist()
        [(0.6+0j), 0.8j]
    """
    try:
        amplitudes = [complex(token.replace(" ", "")) for token in text.split(",")]
    except ValueError:
        raise ArgumentError(f"malformed amplitude list: {text!r}") from None
    return _normalized(amplitudes)


def parse_span(text: str) -> range:
    """Parse ``A:B`` into the inclusive range A…B, or ``A`` into A…A.

    Example:

        >>> list(parse_span("2:5")), list(parse_span("3"))
        ([2, 3, 4, 5], [3])
    """
    parts = text.split(":")
    try:
        bounds = [int(part) for part in parts]
    except ValueError:
        raise ArgumentError(f"malformed range: {text!r}") from None
    if len(bounds) == 1:
        bounds *= 2
    if len(bounds) != 2 or bounds[1] < bounds[0]:
        raise ArgumentError(f"malformed range: {text!r}")
    return range(bounds[0], bounds[1] + 1)


def parse_grid(text: str) -> list[tuple[int, int]]:
    """Parse ``N0:N1,R0:R1`` into all pairs (N, R).

    Example:

        >>> parse_grid("1:2,3")
        [(1, 3), (2, 3)]
    """
    spans = text.split(",")
    if len(spans) != 2:
        raise ArgumentError(f"expected two ranges separated by a comma: {text!r}")
    return list(itertools.product(parse_span(spans[0]), parse_span(spans[1])))


def parse_int_list(text: str) -> list[int]:
    """Parse comma-separated integers."""
    try:
        return [int(token) for token in text.split(",")]
    except ValueError:
        raise ArgumentError(f"malformed list of integers: {text!r}") from None


def doubling(limit: int) -> list[int]:
    """Return 1, 2, 4, … up to and including *limit*.

    Example:

        >>> doubling(10)
        [1, 2, 4, 8]
    """
    if limit < 1:
        raise ArgumentError(f"limit must be positive: {limit}")
    return [2**k for k in range(limit.bit_length()) if 2**k <= limit]


def uniform_state(dim: int) -> StateVector:
    """Return the equal superposition of all *dim* basis states."""
    if dim < 1:
        raise ArgumentError(f"dimension must be positive: {dim}")
    return StateVector.from_amplitudes(np.ones(dim))


def cmd_wigner_count(pairs: t.Sequence[tuple[int, int]]) -> ExperimentRecord:
    """Count equations and unknowns of self-replication for each (N, R)."""
    counts = [wigner_count(n, r) for n, r in pairs]
    columns = ("n", "r", "equations", "unknowns", "deficit", "overdetermined")
    rows = [
        {column: getattr(count, column) for column in columns} for count in counts
    ]
    params = {"pairs": [list(pair) for pair in pairs]}
    return _record("wigner-count", params, {"rows": rows}, columns)


def cmd_clone_demo(
    psi: StateVector,
    *,
    rejected: str = "shared",
    ideal_rejected: int = 0,
    seed: int | None = None,
) -> ExperimentRecord:
    """Run the basis cloner on *psi* and report the gap to a true copy.

    Args:
        psi: The organism state.
        rejected: Either ``"shared"`` for one common rejected state, or
            ``"orthogonal"`` for a distinct basis state per branch.
        ideal_rejected: Index of the rejected state used in the ideal
            output.
        seed: Recorded only; the caller has already drawn *psi*.
    """
    dim = psi.dim
    if rejected == "shared":
        rejected_states = [StateVector.basis(1, 0)] * dim
    elif rejected == "orthogonal":
        rejected_states = [StateVector.basis(dim, k) for k in range(dim)]
    else:
        raise ArgumentError(f"unknown rejected-state layout: {rejected!r}")
    if not 0 <= ideal_rejected < dim:
        raise ArgumentError(
            f"ideal rejected state must be in [0, {dim}): {ideal_rejected}"
        )
    nutrient = StateVector.basis(dim * rejected_states[0].dim, 0)
    cloner = make_basis_cloner(dim, nutrient, rejected_states)
    report = clone_gap(cloner, psi, rejected_states[ideal_rejected])
    params = {
        "dim": dim,
        "psi": psi,
        "rejected": rejected,
        "ideal_rejected": ideal_rejected,
        "seed": seed,
    }
    results = {"basis_index": psi.basis_index(), "report": report}
    return _record("clone-demo", params, results)


def cmd_prob_clone(
    s: float, *, trials: int, seed: int, p: float | None = None
) -> ExperimentRecord:
    """Build the optimal probabilistic cloner for overlap *s* and sample it.

    Raises:
        ArgumentError: if *s* is not in [0, 1).
    """
    if not 0.0 <= s < 1.0:
        raise ArgumentError(f"overlap must be in [0, 1): {s!r}")
    psi1, psi2 = canonical_pair(s)
    optimum = duan_guo_search(psi1, psi2)
    if p is None:
        machine = build_prob_clone_machine(
            psi1, psi2, optimum.probability, optimum.rejected_overlap
        )
    else:
        machine = build_prob_clone_machine(psi1, psi2, p)
    rng = np.random.default_rng(seed)
    samples = [sample_prob_clone(machine, which, trials, rng) for which in (1, 2)]
    residuals = machine.validate()
    params = {"s": s, "trials": trials, "seed": seed, "p": p}
    results = {
        "p_max": optimum.probability,
        "bound": optimum.bound,
        "rejected_overlap": optimum.rejected_overlap,
        "probability": float(machine.probabilities[0]),
        "residuals": residuals,
        "worst_residual": residuals.worst,
        "samples": samples,
    }
    return _record("prob-clone", params, results)


def cmd_cull_demo(
    psi: StateVector, *, blank: str = "shared", seed: int | None = None
) -> ExperimentRecord:
    """Run the basis culler on two replicas of *psi*.

    Args:
        psi: The organism state.
        blank: Either ``"shared"`` for one common blank state, or
            ``"orthogonal"`` for |w_k⟩ = |k⟩. The ideal output always
            uses |w_0⟩.
        seed: Recorded only; the caller has already drawn *psi*.
    """
    dim = psi.dim
    if blank == "shared":
        blanks = [StateVector.basis(dim, 0)] * dim
    elif blank == "orthogonal":
        blanks = [StateVector.basis(dim, k) for k in range(dim)]
    else:
        raise ArgumentError(f"unknown blank-state layout: {blank!r}")
    culler = make_basis_culler(dim, StateVector.basis(2, 0), blanks)
    report = cull_gap(culler, psi)
    params = {"dim": dim, "psi": psi, "blank": blank, "seed": seed}
    results = {"basis_index": psi.basis_index(), "report": report}
    return _record("cull-demo", params, results)


def cmd_paradox_sweep(
    s2: float,
    copies: t.Sequence[int],
    *,
    oracle: bool = True,
    workers: int | None = None,
) -> ExperimentRecord:
    """Evaluate the mutation overlaps for each number of copies.

    Where the brute-force state fits into memory, its overlap and the
    deviation from the closed form are appended as extra columns.
    """
    psi, unitary = canonical_mutation(s2)
    reports = paradox_sweep(psi, unitary, copies, oracle=oracle, max_workers=workers)
    columns = (
        "M",
        "s2",
        "overlap_entangled",
        "overlap_unentangled",
        "ratio",
        "oracle_overlap",
        "oracle_deviation",
    )
    rows = []
    for report in reports:
        deviation = None
        if report.oracle_overlap is not None:
            deviation = abs(report.oracle_overlap - report.overlap_entangled)
        rows.append(
            {
                "M": report.copies,
                "s2": report.s2,
                "overlap_entangled": report.overlap_entangled,
                "overlap_unentangled": report.overlap_unentangled,
                "ratio": report.ratio,
                "oracle_overlap": report.oracle_overlap,
                "oracle_deviation": deviation,
            }
        )
    params = {"s2": s2, "copies": list(copies), "oracle": oracle}
    return _record("paradox-sweep", params, {"rows": rows}, columns)


def cmd_check_entangling_random(trials: int, *, seed: Seed) -> ExperimentRecord:
    """Evaluate the entangling residual for random qubit pairs and unitaries."""
    if trials < 1:
        raise ArgumentError(f"need at least one trial, got {trials}")
    rng = np.random.default_rng(seed)
    results = []
    for _ in range(trials):
        psi = random_state(2, rng)
        phi = random_state(2, rng)
        results.append(entangling_unitarity_residual(psi, phi, random_unitary(2, rng)))
    residuals = np.array([result.residual for result in results])
    phase_residuals = np.array([result.phase_min_residual for result in results])
    summary = {
        "trials": trials,
        "threshold": RESIDUAL_THRESHOLD,
        "fraction_above_threshold": float(np.mean(residuals > RESIDUAL_THRESHOLD)),
        "phase_fraction_above_threshold": float(
            np.mean(phase_residuals > RESIDUAL_THRESHOLD)
        ),
        "min_residual": float(np.min(residuals)),
        "median_residual": float(np.median(residuals)),
        "max_residual": float(np.max(residuals)),
        "max_oracle_residual": max(result.oracle_residual for result in results),
    }
    params = {"mode": "random", "trials": trials, "seed": seed}
    return _record("check-entangling", params, summary)


def cmd_check_entangling_qubit(a: complex, b: complex) -> ExperimentRecord:
    """Evaluate the entangling residual for |0⟩, |1⟩ and a qubit rotation.

    The rotation is `qubit_unitary(a, b)`, i.e. U|0⟩ = a|0⟩ + b|1⟩.
    """
    result = qubit_orthogonal_example(a, b)
    expected = -(complex(b).conjugate() ** 2)
    results = {
        "result": result,
        "expected_cross_term": expected,
        "cross_term_deviation": abs(result.cross_term - expected),
        "oracle_residual": result.oracle_residual,
    }
    params = {"mode": "qubit-example", "a": complex(a), "b": complex(b)}
    return _record("check-entangling", params, results)


def _states_from_json(data: t.Any, key: str) -> list[StateVector]:
    states = data.get(key)
    if not isinstance(states, list):
        raise ArgumentError(f"expected a list under {key!r}")
    parsed = []
    for state in states:
        if not isinstance(state, list) or not state:
            raise ArgumentError(f"expected a non-empty list of amplitudes: {state!r}")
        parsed.append(_normalized([complex_from_json(value) for value in state]))
    return parsed


def cmd_jozsa_check(path: str | Path) -> ExperimentRecord:
    """Read states and ancillas from a JSON file and check feasibility.

    The file contains an object with the keys ``"states"`` and
    ``"ancillas"``, each a list of states. Each state is a list of
    amplitudes, each a number or an ``[re, im]`` pair.

    Raises:
        ArgumentError: if the file cannot be read or is malformed.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ArgumentError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ArgumentError(f"expected a JSON object in {path}")
    states = _states_from_json(data, "states")
    ancillas = _states_from_json(data, "ancillas")
    feasibility = jozsa_clonability_check(states, ancillas)
    params = {"states_file": str(path)}
    return _record("jozsa-check", params, {"feasibility": feasibility})
