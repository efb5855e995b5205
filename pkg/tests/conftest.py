import random
import sys

import pytest

from bfakit.machines import Bfa


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run exhaustive searches")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


EXAMPLE1_TEXT = """\
# two-state BFA with initial function q1&q2
type: bfa
states: 2
alphabet: a,b
initial: q1&q2
final: 1
trans: q1,a = q1|q2
trans: q1,b = q1
trans: q2,a = q2
trans: q2,b = q1&!q2
"""


@pytest.fixture
def example1_text() -> str:
    return EXAMPLE1_TEXT


@pytest.fixture
def example1() -> Bfa:
    return Bfa.build(2, "ab", {(1, "a"): "q1|q2", (1, "b"): "q1", (2, "a"): "q2", (2, "b"): "q1&!q2"},
                     "q1&q2", {1})


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(module.RESULTS):
        terminalreporter.write_line(module.format_line(k))
