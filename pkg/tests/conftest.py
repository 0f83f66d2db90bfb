import numpy as np
import pytest

from trivial_limits.curve import new_curve

# y^2 = x^5 - x over F_7: Weierstrass places (0,0), (1,0), (6,0), Infinity
F7_G2 = [0, -1, 0, 0, 0, 1]
F7_G3 = [0, 1, 0, 0, 0, 0, 0, 1]
F7_G4 = [0, 1, 0, 0, 0, 0, 0, 0, 0, 1]


@pytest.fixture(scope="session")
def c2():
    return new_curve(7, F7_G2)


@pytest.fixture(scope="session")
def c3():
    return new_curve(7, F7_G3)


@pytest.fixture(scope="session")
def c4():
    return new_curve(7, F7_G4)


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(1234)))


_CRITERIA = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    n = int(name.split("_")[2])
    if report.when == "teardown" and not report.failed:
        return
    prev_passed, _, prev_time = _CRITERIA.get(n, (True, name, 0.0))
    # setup time counts too: fixtures may do the heavy lifting
    _CRITERIA[n] = (prev_passed and not report.failed, name, prev_time + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        passed, name, duration = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'}  {name}  ({duration:.2f}s)")
