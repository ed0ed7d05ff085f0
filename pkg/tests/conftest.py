import pytest

from bmsadec import fixtures
from bmsadec.gf import FieldTower


@pytest.fixture(scope="session")
def tower():
    return fixtures.tower()


@pytest.fixture(scope="session")
def code():
    return fixtures.example1_code()


@pytest.fixture()
def table():
    return fixtures.example1_table()


def elem(text: str) -> int:
    return FieldTower.parse(text)
