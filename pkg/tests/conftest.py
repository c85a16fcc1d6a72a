import pytest

from multlat import default_corpus, zn_ideal_lattice


@pytest.fixture(scope="session")
def z8():
    return zn_ideal_lattice(8)


@pytest.fixture(scope="session")
def z24():
    return zn_ideal_lattice(24)


@pytest.fixture(scope="session")
def z27():
    return zn_ideal_lattice(27)


@pytest.fixture(scope="session")
def z30():
    return zn_ideal_lattice(30)


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
