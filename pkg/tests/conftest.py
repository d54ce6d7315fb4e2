import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from fuzzycover.model import ApproximationSpace
from fuzzycover.neighborhood import build_table
from fuzzycover.sysio import load

FIXTURES = pathlib.Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def price_file():
    return load(str(FIXTURES / "price.json"))


@pytest.fixture(scope="session")
def price_space(price_file):
    return price_file.system.space("price")


@pytest.fixture(scope="session")
def price_table(price_space):
    return build_table(price_space)


@pytest.fixture(scope="session")
def target_x(price_file):
    return price_file.target("X")


@pytest.fixture(scope="session")
def two_cov_file():
    return load(str(FIXTURES / "two_cov.json"))


@pytest.fixture(scope="session")
def quality_space(two_cov_file):
    return two_cov_file.system.space("quality")


@pytest.fixture(scope="session")
def crisp_file():
    return load(str(FIXTURES / "crisp.json"))


@pytest.fixture(scope="session")
def crisp_space(crisp_file):
    return ApproximationSpace(crisp_file.universe, crisp_file.system.coverings[0])


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
