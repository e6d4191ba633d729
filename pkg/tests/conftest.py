from __future__ import annotations

import pytest

from sdhall.backends import A2, Iso, QuiverBackend, VectBackend
from sdhall.double import DrinfeldDouble
from sdhall.sdh import SDHAlgebra

# A2 is the quiver 0 -> 1; S1, S2 are the simples at the source and the sink
S1 = Iso((1, 0), 0)
S2 = Iso((0, 1), 0)
SPLIT = Iso((1, 1), 0)  # S1 + S2
P1 = Iso((1, 1), 1)  # projective cover of S1, indecomposable


# filled by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_runtest_logreport(report):
    # a criterion that raised before reaching its verdict still gets a line
    if "test_acceptance" in report.nodeid and report.failed and report.when == "call":
        name = report.nodeid.rsplit("::", 1)[-1]
        number = int(name.split("_")[2])
        if not any(line.startswith(f"criterion {number:2d} ") for line in ACCEPTANCE_LINES):
            ACCEPTANCE_LINES.append(f"criterion {number:2d} {name}: FAIL (raised before completing)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def V(n: int) -> Iso:
    return Iso((n,), 0)


@pytest.fixture(scope="session")
def vect2():
    return VectBackend(2)


@pytest.fixture(scope="session")
def vect3():
    return VectBackend(3)


@pytest.fixture(scope="session")
def a2():
    return QuiverBackend(A2, 2)


@pytest.fixture(scope="session")
def sdh_vect(vect2):
    return SDHAlgebra(vect2)


@pytest.fixture(scope="session")
def sdh_a2(a2):
    return SDHAlgebra(a2)


@pytest.fixture(scope="session")
def double_vect(sdh_vect):
    return DrinfeldDouble(sdh_vect)


@pytest.fixture(scope="session")
def double_a2(sdh_a2):
    return DrinfeldDouble(sdh_a2)
