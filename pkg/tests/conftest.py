import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracle helper

from ternrep import named_form


@pytest.fixture(scope="session")
def s4():
    return named_form("S4f"), named_form("S4g")


@pytest.fixture(scope="session")
def s6():
    return named_form("S6f"), named_form("S6g")


@pytest.fixture(scope="session")
def s7():
    return named_form("S7f"), named_form("S7g")


@pytest.fixture(scope="session")
def s8():
    return named_form("S8f"), named_form("S8g")
