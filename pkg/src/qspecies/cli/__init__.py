# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Command-line front end to all demonstrations.

Each subcommand runs one experiment and writes an `ExperimentRecord`
as JSON, CSV or plain text. Run :samp:`qspecies {subcommand} --help`
for the options of each subcommand. Global options go *before* the
subcommand:

.. code-block:: shell-session

    $ qspecies --format json --seed 7 clone-demo --random --dim 3

Exit codes:

- 0: success;
- 2: usage errors, including malformed amplitudes and files;
- 3: the requested construction is infeasible or outside the domain of
  a theorem;
- 4: a state would exceed the configured capacity.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import logging
import os
import sys
import typing as t
from pathlib import Path

import numpy as np

from qspecies import __version__
from qspecies.culling import DomainError
from qspecies.hilbert import (
    DEFAULT_TOLERANCES,
    ArgumentError,
    CapacityError,
    DimensionError,
    IsometryError,
    QSpeciesError,
    StateVector,
    Tolerances,
    random_state,
)
from qspecies.replication import DegenerateInputError, InfeasibleError

from . import _commands as commands
from ._records import ExperimentRecord, OutputFormat, write_record

__all__ = (
    "OUTPUT_DIR_ENV",
    "ExperimentRecord",
    "OutputFormat",
    "build_parser",
    "exit_code_for",
    "main",
    "write_record",
)

LOG = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "QSPECIES_OUTPUT_DIR"
"""Environment variable naming the default output directory."""

_MAX_SEED = 2**64


def exit_code_for(exc: QSpeciesError) -> int:
    """Map a library exception to the exit code of the CLI.

    Example:

        >>> exit_code_for(CapacityError("too large"))
        4
        >>> exit_code_for(InfeasibleError("p too large"))
        3
    """
    if isinstance(exc, CapacityError):
        return 4
    if isinstance(exc, (InfeasibleError, DomainError, DegenerateInputError)):
        return 3
    if isinstance(exc, IsometryError):
        return 3
    if isinstance(exc, (ArgumentError, DimensionError)):
        return 2
    return 1


def _seed(text: str) -> int:
    try:
        seed = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= seed < _MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must be in [0, 2**64): {seed}")
    return seed


def _tolerance(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE: {text!r}")
    if name not in Tolerances.names():
        choices = ", ".join(Tolerances.names())
        raise argparse.ArgumentTypeError(
            f"unknown tolerance {name!r}; use one of {choices}"
        )
    try:
        return name, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}") from None


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _add_state_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--dim",
        type=int,
        default=None,
        help="dimension of the organism (default: 2, or the number of amplitudes)",
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--psi",
        metavar="AMPLITUDES",
        help="comma-separated complex amplitudes, e.g. '1,1j'; "
        "normalized automatically (default: uniform superposition)",
    )
    group.add_argument(
        "--random",
        action="store_true",
        help="draw the organism state at random from --seed",
    )


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser of the ``qspecies`` command."""
    parser = argparse.ArgumentParser(
        prog="qspecies",
        description="Numerical experiments on the replication, culling "
        "and mutation of quantum species.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "--seed",
        type=_seed,
        default=None,
        help="seed of all random draws; required for json and csv "
        "output of randomized experiments (default in text mode: 0)",
    )
    parser.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.TEXT,
        metavar="{json,csv,text}",
        help="output format (default: text)",
    )
    parser.add_argument(
        "-o",
        "--output",
        metavar="PATH",
        help=f"write the record to this file instead of stdout; "
        f"default: <subcommand>.<format> in ${OUTPUT_DIR_ENV} if set",
    )
    parser.add_argument(
        "--tol",
        type=_tolerance,
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override a numeric tolerance; may be repeated",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log more details to stderr; repeat for debug output",
    )
    subparsers = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    subparsers.required = True

    sub = subparsers.add_parser(
        "wigner-count", help="count equations and unknowns of self-replication"
    )
    group = sub.add_argument_group("single point")
    group.add_argument("--n", type=int, help="dimension N of the organism")
    group.add_argument("--r", type=int, help="dimension R of the rejected part")
    sub.add_argument(
        "--grid",
        metavar="N0:N1,R0:R1",
        help="evaluate all (N, R) in these inclusive ranges",
    )
    sub.set_defaults(handler=_run_wigner_count, randomized=lambda args: False)

    sub = subparsers.add_parser(
        "clone-demo", help="run the basis cloner on a superposition"
    )
    _add_state_options(sub)
    sub.add_argument(
        "--rejected",
        choices=["shared", "orthogonal"],
        default="shared",
        help="one common rejected state or one per basis state (default: %(default)s)",
    )
    sub.add_argument(
        "--ideal-rejected",
        type=int,
        default=0,
        metavar="INDEX",
        help="rejected state of the ideal copy (default: %(default)s)",
    )
    sub.set_defaults(handler=_run_clone_demo, randomized=lambda args: args.random)

    sub = subparsers.add_parser(
        "prob-clone", help="build and sample the optimal probabilistic cloner"
    )
    sub.add_argument("--s", type=float, required=True, help="overlap in [0, 1)")
    sub.add_argument(
        "--trials",
        type=int,
        default=10_000,
        help="simulated measurements per input (default: %(default)s)",
    )
    sub.add_argument(
        "--p",
        type=float,
        default=None,
        help="success probability to build the machine for (default: the maximum)",
    )
    sub.set_defaults(handler=_run_prob_clone, randomized=lambda args: True)

    sub = subparsers.add_parser(
        "cull-demo", help="run the basis culler on two replicas"
    )
    _add_state_options(sub)
    sub.add_argument(
        "--blank",
        choices=["shared", "orthogonal"],
        default="shared",
        help="one common blank state or one per basis state (default: %(default)s)",
    )
    sub.set_defaults(handler=_run_cull_demo, randomized=lambda args: args.random)

    sub = subparsers.add_parser(
        "paradox-sweep", help="overlap of the entangled mutation versus copies"
    )
    sub.add_argument(
        "--s2", type=float, required=True, help="|⟨ψ|U|ψ⟩|² in [0, 1]"
    )
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", metavar="M1,M2,...", help="numbers of copies")
    group.add_argument(
        "--m-doubling", type=int, metavar="MAX", help="1, 2, 4, … up to MAX copies"
    )
    group.add_argument("--m-range", metavar="A:B", help="all copies from A to B")
    sub.add_argument(
        "--no-oracle",
        dest="oracle",
        action="store_false",
        help="skip the brute-force comparison",
    )
    sub.add_argument(
        "--workers", type=int, default=None, help="number of worker threads"
    )
    sub.set_defaults(handler=_run_paradox_sweep, randomized=lambda args: False)

    sub = subparsers.add_parser(
        "check-entangling",
        help="test whether one unitary can entangle a species with its mutant",
    )
    sub.add_argument("mode", choices=["random", "qubit-example"])
    sub.add_argument(
        "--trials",
        type=int,
        default=1000,
        help="number of random trials (default: %(default)s)",
    )
    sub.add_argument(
        "--a", type=_complex, default=np.sqrt(0.5), help="amplitude a of U|0⟩"
    )
    sub.add_argument(
        "--b", type=_complex, default=np.sqrt(0.5), help="amplitude b of U|0⟩"
    )
    sub.set_defaults(
        handler=_run_check_entangling, randomized=lambda args: args.mode == "random"
    )

    sub = subparsers.add_parser(
        "jozsa-check", help="check ancilla-assisted cloning of a state family"
    )
    sub.add_argument(
        "states_file",
        metavar="FILE",
        help="JSON object with lists 'states' and 'ancillas'",
    )
    sub.set_defaults(handler=_run_jozsa_check, randomized=lambda args: False)
    return parser


def _organism(args: argparse.Namespace) -> StateVector:
    if args.psi is not None:
        psi = commands.parse_amplitudes(args.psi)
        if args.dim is not None and args.dim != psi.dim:
            raise DimensionError(f"--dim {args.dim} but {psi.dim} amplitudes given")
        return psi
    dim = 2 if args.dim is None else args.dim
    if args.random:
        return random_state(dim, args.seed)
    return commands.uniform_state(dim)


def _run_wigner_count(args: argparse.Namespace) -> ExperimentRecord:
    if args.grid is not None:
        if args.n is not None or args.r is not None:
            raise ArgumentError("--grid cannot be combined with --n and --r")
        return commands.cmd_wigner_count(commands.parse_grid(args.grid))
    if args.n is None or args.r is None:
        raise ArgumentError("either --grid or both --n and --r are required")
    return commands.cmd_wigner_count([(args.n, args.r)])


def _run_clone_demo(args: argparse.Namespace) -> ExperimentRecord:
    return commands.cmd_clone_demo(
        _organism(args),
        rejected=args.rejected,
        ideal_rejected=args.ideal_rejected,
        seed=args.seed if args.random else None,
    )


def _run_prob_clone(args: argparse.Namespace) -> ExperimentRecord:
    return commands.cmd_prob_clone(args.s, trials=args.trials, seed=args.seed, p=args.p)


def _run_cull_demo(args: argparse.Namespace) -> ExperimentRecord:
    return commands.cmd_cull_demo(
        _organism(args), blank=args.blank, seed=args.seed if args.random else None
    )


def _run_paradox_sweep(args: argparse.Namespace) -> ExperimentRecord:
    if args.m is not None:
        copies = commands.parse_int_list(args.m)
    elif args.m_doubling is not None:
        copies = commands.doubling(args.m_doubling)
    else:
        copies = list(commands.parse_span(args.m_range))
    return commands.cmd_paradox_sweep(
        args.s2, copies, oracle=args.oracle, workers=args.workers
    )


def _run_check_entangling(args: argparse.Namespace) -> ExperimentRecord:
    if args.mode == "random":
        return commands.cmd_check_entangling_random(args.trials, seed=args.seed)
    return commands.cmd_check_entangling_qubit(args.a, args.b)


def _run_jozsa_check(args: argparse.Namespace) -> ExperimentRecord:
    return commands.cmd_jozsa_check(args.states_file)


def _resolve_seed(args: argparse.Namespace) -> None:
    if args.seed is not None or not args.randomized(args):
        return
    if args.format != OutputFormat.TEXT:
        raise ArgumentError(
            f"--seed is required for {args.format.value} output of {args.subcommand}"
        )
    args.seed = 0


def _output_path(args: argparse.Namespace) -> Path | None:
    if args.output is not None:
        return Path(args.output)
    directory = os.environ.get(OUTPUT_DIR_ENV)
    if directory:
        suffix = "txt" if args.format == OutputFormat.TEXT else args.format.value
        return Path(directory) / f"{args.subcommand}.{suffix}"
    return None


def _open_output(path: Path | None) -> t.ContextManager[t.TextIO]:
    if path is None:
        return contextlib.nullcontext(sys.stdout)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path.open("w", encoding="utf-8", newline="")


def _render(record: ExperimentRecord, output_format: OutputFormat) -> str:
    buffer = io.StringIO(newline="")
    try:
        write_record(record, buffer, output_format)
    except ValueError as exc:
        raise ArgumentError(f"cannot serialize the result: {exc}") from exc
    return buffer.getvalue()


def _configure_logging(verbosity: int) -> None:
    level = max(logging.DEBUG, logging.WARNING - 10 * verbosity)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s:%(name)s: %(message)s",
    )


def main(argv: t.Sequence[str] | None = None) -> int:
    """Run the ``qspecies`` command and return its exit code.

    Usage errors detected by :mod:`argparse` itself exit via
    :exc:`SystemExit` with code 2, as usual.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        _resolve_seed(args)
        tolerances = DEFAULT_TOLERANCES.replace(**dict(args.tol))
        with tolerances:
            record = args.handler(args)
        text = _render(record, args.format)
    except QSpeciesError as exc:
        LOG.debug("%s failed", args.subcommand, exc_info=True)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    path = _output_path(args)
    try:
        with _open_output(path) as stream:
            stream.write(text)
    except OSError as exc:
        print(f"{parser.prog}: error: cannot write {path}: {exc}", file=sys.stderr)
        return 2
    if path is not None:
        LOG.info("wrote %s", path)
    return 0
