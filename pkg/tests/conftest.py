import pytest

from ringspace import parse_ring


@pytest.fixture(scope="session")
def z2():
    return parse_ring("Z2")


@pytest.fixture(scope="session")
def z3():
    return parse_ring("Z3")


@pytest.fixture(scope="session")
def z4():
    return parse_ring("Z4")


@pytest.fixture(scope="session")
def z6():
    return parse_ring("Z6")


@pytest.fixture(scope="session")
def z8():
    return parse_ring("Z8")


@pytest.fixture(scope="session")
def z9():
    return parse_ring("Z9")


@pytest.fixture(scope="session")
def z12():
    return parse_ring("Z12")


@pytest.fixture(scope="session")
def z2xz2():
    return parse_ring("Z2xZ2")
