import pytest

from ring_explorer import Configuration, builtin_algorithm, enumerate_initial_configurations


@pytest.fixture(scope="session")
def fp2():
    return builtin_algorithm("FP2")


@pytest.fixture(scope="session")
def ft3():
    return builtin_algorithm("FT3")


@pytest.fixture(scope="session")
def ap3():
    return builtin_algorithm("AP3")


@pytest.fixture(scope="session")
def at4():
    return builtin_algorithm("AT4")


@pytest.fixture(scope="session")
def small_configurations() -> list[Configuration]:
    "every class of at most three robots on rings of three to six nodes"
    return [c for n in range(3, 7) for k in range(1, 4) for c in enumerate_initial_configurations(n, k)]
