# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Conversion of states, matrices and reports to and from JSON values.

Complex numbers are written as ``[re, im]`` pairs. Since Python writes
floats with their shortest round-tripping representation, a value
passed through `to_jsonable()`, `json.dumps()`, `json.loads()` and the
matching ``*_from_json()`` function comes back bit for bit.

    >>> import json
    >>> state = StateVector([0.6, 0.8j])
    >>> text = json.dumps(to_jsonable(state))
    >>> text
    '[[0.6, 0.0], [0.0, 0.8]]'
    >>> state_from_json(json.loads(text)) == state
    True
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import typing as t

import numpy as np

from ._errors import ArgumentError
from ._states import CompositeSpace, DensityMatrix, StateVector, UnitaryMatrix

__all__ = (
    "complex_from_json",
    "state_from_json",
    "to_jsonable",
    "unitary_from_json",
)


@functools.singledispatch
def to_jsonable(obj: t.Any) -> t.Any:
    """Convert *obj* into nested lists, dicts and scalars.

    Dataclasses become dicts of their fields. Other types can be added
    via ``to_jsonable.register``.

    Raises:
        TypeError: if *obj* has no known conversion.
    """
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            field.name: to_jsonable(getattr(obj, field.name))
            for field in dataclasses.fields(obj)
        }
    raise TypeError(f"cannot convert to JSON: {obj!r}")


@to_jsonable.register(type(None))
@to_jsonable.register(bool)
@to_jsonable.register(int)
@to_jsonable.register(float)
@to_jsonable.register(str)
def _(obj: t.Any) -> t.Any:
    return obj


@to_jsonable.register
def _(obj: complex) -> list[float]:
    return [obj.real, obj.imag]


@to_jsonable.register
def _(obj: enum.Enum) -> t.Any:
    return to_jsonable(obj.value)


@to_jsonable.register(list)
@to_jsonable.register(tuple)
def _(obj: t.Sequence[t.Any]) -> list[t.Any]:
    return [to_jsonable(item) for item in obj]


@to_jsonable.register
def _(obj: dict) -> dict[str, t.Any]:
    return {str(key): to_jsonable(value) for key, value in obj.items()}


@to_jsonable.register
def _(obj: np.generic) -> t.Any:
    return to_jsonable(obj.item())


@to_jsonable.register
def _(obj: np.ndarray) -> list[t.Any]:
    if np.iscomplexobj(obj):
        pairs = np.stack([obj.real, obj.imag], axis=-1)
        return t.cast(list, pairs.tolist())
    return t.cast(list, obj.tolist())


@to_jsonable.register(StateVector)
@to_jsonable.register(UnitaryMatrix)
@to_jsonable.register(DensityMatrix)
def _(obj: t.Any) -> list[t.Any]:
    return to_jsonable(np.asarray(obj))


@to_jsonable.register
def _(obj: CompositeSpace) -> list[int]:
    return list(obj.factor_dims)


def complex_from_json(value: t.Any) -> complex:
    """Parse a number or an ``[re, im]`` pair.

    Raises:
        ArgumentError: if *value* is neither.
    """
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(part, (int, float)) for part in value)
    ):
        return complex(value[0], value[1])
    raise ArgumentError(f"not a complex number: {value!r}")


def state_from_json(data: t.Any, *, normalize: bool = False) -> StateVector:
    """Parse a list of amplitudes into a `StateVector`.

    Each amplitude is either a real number or an ``[re, im]`` pair.

    Raises:
        ArgumentError: if *data* is malformed or, unless *normalize* is
            passed, not normalized.
    """
    if not isinstance(data, (list, tuple)) or not data:
        raise ArgumentError(f"expected a non-empty list of amplitudes: {data!r}")
    amplitudes = [complex_from_json(value) for value in data]
    if normalize:
        return StateVector.from_amplitudes(amplitudes)
    return StateVector(amplitudes)


def unitary_from_json(data: t.Any) -> UnitaryMatrix:
    """Parse a list of rows into a `UnitaryMatrix`.

    Raises:
        ArgumentError: if *data* is malformed or not unitary.
    """
    if not isinstance(data, (list, tuple)) or not data:
        raise ArgumentError(f"expected a non-empty list of rows: {data!r}")
    rows = []
    for row in data:
        if not isinstance(row, (list, tuple)):
            raise ArgumentError(f"expected a row of entries: {row!r}")
        rows.append([complex_from_json(value) for value in row])
    if len({len(row) for row in rows}) != 1:
        raise ArgumentError("rows have different lengths")
    return UnitaryMatrix(rows)
