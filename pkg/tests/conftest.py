import warnings

import pytest

warnings.filterwarnings("ignore", message=".*TBB.*")

from sgtree import ExplorationConfig, iter_semigroups, tabulate  # noqa: E402


@pytest.fixture(scope="session")
def stats22():
    return tabulate(ExplorationConfig(22))


@pytest.fixture(scope="session")
def stats23():
    return tabulate(ExplorationConfig(23))


@pytest.fixture(scope="session")
def semigroups12():
    return [s for s in iter_semigroups(12) if s.genus >= 1]


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
