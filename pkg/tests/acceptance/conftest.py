import pytest

from mealygrowth import enumerate_growth, get_builtin


def _tables(name, nmax):
    tables, _ = enumerate_growth(get_builtin(name).automaton, nmax)
    assert not tables.truncated
    return tables


@pytest.fixture(scope="session")
def a4_tables():
    return _tables("a4", 30)


@pytest.fixture(scope="session")
def a6_tables():
    return _tables("a6", 20)


@pytest.fixture(scope="session")
def b4_tables():
    return _tables("b4", 20)


@pytest.fixture(scope="session")
def b5_tables():
    return _tables("b5", 16)
