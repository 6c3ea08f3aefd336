import os

import pytest

import binopy as bp

DATA = os.path.join(os.path.dirname(__file__), 'data')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: acceptance checks that take more than a few seconds')


@pytest.fixture(autouse=True)
def defaultConfig():
    bp.config.reset()
    yield bp.config
    bp.config.reset()


@pytest.fixture(scope='session')
def datadir():
    return DATA


@pytest.fixture(scope='session')
def grid8():
    """Residue grid mod 2 of depth 8."""
    return bp.build_grid(8, 2)


@pytest.fixture(scope='session')
def stars8():
    return bp.enumerate_star_pairs(8)


@pytest.fixture(scope='session')
def A0_8(stars8):
    return bp.build_A0(8)


# pairs listed as examples of the star condition
EXAMPLE_PAIRS = [
    ('1', '1'),
    ('101', '11'),
    ('1001', '11'),
    ('1101', '111'),
    ('1110', '10'),
]


@pytest.fixture(scope='session')
def examplePairs():
    return EXAMPLE_PAIRS
