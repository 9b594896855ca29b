import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hecke_braid.gf import find_element_of_order, make_field  # noqa: E402

def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")  # collected lines, one per criterion
    if mod is not None and mod.LEDGER:
        terminalreporter.section("acceptance criteria")
        for line in mod.LEDGER:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def F8():
    return make_field(2, 3, "AUTO")


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 2, "AUTO")


@pytest.fixture(scope="session")
def F49():
    return make_field(7, 2, "AUTO")


@pytest.fixture(scope="session")
def a8(F8):
    """Hecke parameter of order 7 in F_8."""
    return find_element_of_order(F8, 7)


@pytest.fixture(scope="session")
def a9(F9):
    return find_element_of_order(F9, 8)


@pytest.fixture(scope="session")
def a49(F49):
    return find_element_of_order(F49, 8)
