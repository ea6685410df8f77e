import pytest

from tiltwalk import walks


@pytest.fixture(scope="session")
def long_sequences():
    """Streamed a/b/w sequences to n = 2001, shared by the asymptotic tests."""
    return {ell: walks.sequences(ell, 2001) for ell in range(2, 10)}


@pytest.fixture(scope="session")
def classical_200():
    return walks.classical_table(200)
