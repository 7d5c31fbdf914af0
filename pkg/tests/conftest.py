"""Shared fixtures; modules are imported from the src root like the entry scripts do."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from lie.cartan import parse_cartan  # noqa: E402
from quantum.uqfull import UqAlgebra  # noqa: E402
from uber.sqvv import sqvv_presentation  # noqa: E402


@pytest.fixture(scope="session")
def sl3():
    return UqAlgebra(parse_cartan("A2"))


@pytest.fixture(scope="session")
def sl4():
    return UqAlgebra(parse_cartan("A3"))


@pytest.fixture(scope="session")
def sqvv2():
    return sqvv_presentation(2)
