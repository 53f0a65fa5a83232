import pytest

from implicative.io import shipped_algebra
from implicative.universe import build_universe


@pytest.fixture(scope="session")
def b2():
    return shipped_algebra("b2")


@pytest.fixture(scope="session")
def c3():
    return shipped_algebra("c3")


@pytest.fixture(scope="session")
def c3_half():
    return shipped_algebra("c3_half")


@pytest.fixture(scope="session")
def m2():
    return shipped_algebra("m2")


@pytest.fixture(scope="session")
def c3_weak():
    return shipped_algebra("c3_weak")


@pytest.fixture(scope="session")
def w_b2_2(b2):
    return build_universe(b2, 2)


@pytest.fixture(scope="session")
def w_b2_3(b2):
    return build_universe(b2, 3)


@pytest.fixture(scope="session")
def w_c3_2(c3):
    return build_universe(c3, 2)


@pytest.fixture(scope="session")
def w_weak_2(c3_weak):
    return build_universe(c3_weak, 2)
