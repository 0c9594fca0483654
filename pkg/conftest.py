# SPDX-FileCopyrightText: 2020-2024 CERN
# SPDX-FileCopyrightText: 2023-2024 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Pytest configuration file."""

import typing as t

import numpy as np
import pytest

from qspecies.hilbert import DEFAULT_TOLERANCES, _tolerances


@pytest.fixture(autouse=True)
def default_tolerances() -> t.Iterator[None]:
    yield
    # Tests that fail halfway may leave tolerances installed.
    if _tolerances._current is not DEFAULT_TOLERANCES:
        _tolerances._current = DEFAULT_TOLERANCES


@pytest.fixture(autouse=True)
def doctest_numpy(doctest_namespace: dict[str, t.Any]) -> None:
    doctest_namespace["np"] = np
