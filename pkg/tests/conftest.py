import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from matdecomp import graphic, uniform
from matdecomp.fixtures import fixture_corpus


@pytest.fixture
def k4e():
    # edges 0=ab, 1=bc, 2=ca, 3=cd, 4=da
    return graphic("abcd", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "a")])


@pytest.fixture
def u23():
    return uniform(2, 3)


@pytest.fixture
def u24():
    return uniform(2, 4)


@pytest.fixture
def u34():
    return uniform(3, 4)


@pytest.fixture
def u45():
    return uniform(4, 5)


@pytest.fixture(scope="session")
def corpus():
    return fixture_corpus()
