import sys
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from oddaut.autsearch import automorphism_group  # noqa: E402
from oddaut.constructors import named  # noqa: E402
from oddaut.symclass import arc_regularity_level  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SMALL_NAMES = ["F004A", "F006A", "F008A", "F010A", "F014A", "F016A", "F018A", "F020A", "F020B"]


@lru_cache(maxsize=None)
def graph(name):
    return named(name)


@lru_cache(maxsize=None)
def aut(name):
    return automorphism_group(graph(name))


@lru_cache(maxsize=None)
def level(name):
    return arc_regularity_level(graph(name), aut(name))


@pytest.fixture
def petersen():
    return graph("F010A")


@pytest.fixture
def heawood():
    return graph("F014A")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
