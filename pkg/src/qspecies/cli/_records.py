# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Experiment records and their output formats."""

from __future__ import annotations

import csv
import dataclasses
import datetime
import enum
import json
import typing as t

from qspecies.hilbert import to_jsonable

__all__ = (
    "ExperimentRecord",
    "OutputFormat",
    "flatten",
    "write_record",
)


class OutputFormat(str, enum.Enum):
    """The formats in which a record can be written."""

    JSON = "json"
    CSV = "csv"
    TEXT = "text"


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


@dataclasses.dataclass(frozen=True)
class ExperimentRecord:
    """The outcome of one CLI subcommand.

    Attributes:
        subcommand: Name of the subcommand that produced this record.
        params: The full parameterization, including the seed.
        results: The report types of the library, keyed by name. If the
            subcommand produces a table, its rows are stored under
            ``"rows"``, one dict per row.
        version: Version of this package.
        timestamp: Time of creation, ISO 8601 in UTC.
        columns: Column names of the table under ``results["rows"]``,
            if any.
    """

    subcommand: str
    params: dict[str, t.Any]
    results: dict[str, t.Any]
    version: str
    timestamp: str = dataclasses.field(default_factory=_now)
    columns: tuple[str, ...] = ()

    def payload(self) -> dict[str, t.Any]:
        """Everything except the timestamp, converted to JSON types.

        Reruns with the same parameters produce identical payloads.
        """
        return {
            "subcommand": self.subcommand,
            "params": to_jsonable(self.params),
            "results": to_jsonable(self.results),
            "version": self.version,
        }

    def to_json(self) -> str:
        """Serialize the record with sorted keys."""
        data = self.payload()
        data["timestamp"] = self.timestamp
        return json.dumps(data, sort_keys=True, indent=2, allow_nan=False)


def _cell(value: t.Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"), sort_keys=True)
    return str(value)


def flatten(data: t.Mapping[str, t.Any], prefix: str = "") -> dict[str, str]:
    """Flatten nested JSON data into dotted keys and string cells.

    Lists are kept whole and written as compact JSON.

    Example:

        >>> flatten({"a": {"b": 0.5, "c": None}, "d": [1.0, 0.0]})
        {'a.b': '0.5', 'a.c': '', 'd': '[1.0,0.0]'}
    """
    cells: dict[str, str] = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            cells.update(flatten(value, prefix=f"{name}."))
        else:
            cells[name] = _cell(value)
    return cells


def _write_csv(record: ExperimentRecord, stream: t.TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    results = to_jsonable(record.results)
    if record.columns:
        writer.writerow(record.columns)
        for row in results["rows"]:
            writer.writerow([_cell(row[column]) for column in record.columns])
        return
    cells = flatten(results)
    writer.writerow(cells.keys())
    writer.writerow(cells.values())


def _write_text(record: ExperimentRecord, stream: t.TextIO) -> None:
    results = to_jsonable(record.results)
    rows = results.pop("rows", None)
    stream.write(f"{record.subcommand} (qspecies {record.version})\n")
    for key, cell in flatten(to_jsonable(record.params)).items():
        stream.write(f"  {key} = {cell}\n")
    for key, cell in flatten(results).items():
        stream.write(f"{key}: {cell}\n")
    if record.columns and rows is not None:
        table = [list(record.columns)]
        table += [[_cell(row[column]) for column in record.columns] for row in rows]
        widths = [max(len(cell) for cell in column) for column in zip(*table)]
        for line in table:
            cells = [cell.rjust(width) for cell, width in zip(line, widths)]
            stream.write("  ".join(cells) + "\n")


def write_record(
    record: ExperimentRecord, stream: t.TextIO, output_format: OutputFormat
) -> None:
    """Write *record* to *stream* in the given format.

    JSON output is the full record. CSV output is either the record's
    table or, for subcommands without one, a single row of flattened
    results. Text output is meant for humans and may change.
    """
    if output_format == OutputFormat.JSON:
        stream.write(record.to_json())
        stream.write("\n")
    elif output_format == OutputFormat.CSV:
        _write_csv(record, stream)
    else:
        _write_text(record, stream)
