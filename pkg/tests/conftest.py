import pytest

from vertexmagic.abelian import enumerate_abelian_groups
from vertexmagic.workbench import crosscheck, standard_grid


@pytest.fixture(scope="session")
def catalog8():
    return enumerate_abelian_groups(8)


@pytest.fixture(scope="session")
def grid():
    return standard_grid()


@pytest.fixture(scope="session")
def campaign(grid, catalog8):
    """The full standard crosscheck, shared by workbench and acceptance tests."""
    return crosscheck(grid, catalog8)
