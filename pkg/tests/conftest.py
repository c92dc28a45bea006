import random

import pytest

from coiso.catalog import find, load_default


@pytest.fixture(scope="session")
def catalog():
    return load_default()


@pytest.fixture(scope="session")
def entry(catalog):
    return lambda label: find(catalog, label)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
