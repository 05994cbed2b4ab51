import functools
import sys

import pytest

from satake.root_datum import build_root_datum


@functools.lru_cache(maxsize=None)
def datum(name):
    return build_root_datum(name)


@pytest.fixture
def a1sc():
    return datum("A1-sc")


@pytest.fixture
def a1ad():
    return datum("A1-ad")


@pytest.fixture
def a2sc():
    return datum("A2-sc")


@pytest.fixture
def b2sc():
    return datum("B2-sc")


@pytest.fixture
def g2sc():
    return datum("G2-sc")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
