import pytest

from ellalg.config import load_fixture


@pytest.fixture(scope="session")
def fp3():
    return load_fixture("fp-mu3")


@pytest.fixture(scope="session")
def fp9():
    return load_fixture("fp-mu9")


@pytest.fixture(scope="session")
def q3():
    return load_fixture("q-mu3")


@pytest.fixture(scope="session")
def q9():
    return load_fixture("q-mu9")


@pytest.fixture(scope="session")
def q3_static(q3):
    # hypothesis needs a non-function-scoped alias for the session fixture
    return q3
