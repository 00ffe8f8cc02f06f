import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quandlekit import AlexanderModule, make_dihedral  # noqa: E402
from quandlekit.reproduce import phi_s4, s4_quandle, theta_r3  # noqa: E402

# knots stored without an orient: header, usable with the PD oracle
PLAIN_KNOTS = ["3_1", "4_1", "5_1", "5_2", "6_1", "hopf"]


@pytest.fixture
def R3():
    return make_dihedral(3)


@pytest.fixture
def S4():
    return s4_quandle()


@pytest.fixture
def phi():
    return phi_s4()


@pytest.fixture
def theta():
    return theta_r3()


@pytest.fixture
def R3mod():
    return AlexanderModule(3, [1, 1])


def pytest_terminal_summary(terminalreporter):
    lines = getattr(pytest, "acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
        passed = sum(line.startswith("[PASS]") for line in lines)
        terminalreporter.write_line(f"{passed}/{len(lines)} criteria passed")
