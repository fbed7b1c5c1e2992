import pytest

from fluctuverse import load_constants


@pytest.fixture(scope="session")
def reg():
    return load_constants()
