import pytest

from parcal.core import ParamSet


@pytest.fixture(scope="session")
def base8() -> ParamSet:
    return ParamSet.make(2, 8, (2, 4, 8), {2: 2, 4: 3, 8: 5})


@pytest.fixture(scope="session")
def two_level() -> ParamSet:
    return ParamSet.make(3, 9, (3, 9), {3: 3, 9: 4})


@pytest.fixture(scope="session")
def three_level() -> ParamSet:
    return ParamSet.make(3, 18, (3, 9, 18), {3: 3, 9: 4, 18: 9})


@pytest.fixture(scope="session")
def slack() -> ParamSet:
    # generous top budget: sub-poset ap sets become nontrivial
    return ParamSet.make(3, 9, (3, 9), {3: 3, 9: 7})
