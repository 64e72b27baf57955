import numpy as np
import pytest

from xmodkit.catalog import generate_catalog
from xmodkit.crossed_modules import trivial_action, validate_xmod, xmod_zero_module
from xmodkit.groups import cyclic


@pytest.fixture(scope="session")
def mod2():
    """``Z4 -> Z2`` reduction mod 2 with the trivial action."""
    Z4, Z2 = cyclic(4), cyclic(2)
    return validate_xmod(Z4, Z2, [0, 1, 0, 1], trivial_action(Z2, Z4), "Z4->Z2")


@pytest.fixture(scope="session")
def zero22():
    return xmod_zero_module(cyclic(2), cyclic(2))


@pytest.fixture(scope="session")
def id22():
    Z2 = cyclic(2)
    return validate_xmod(Z2, Z2, [0, 1], trivial_action(Z2, Z2), "Z2->Z2 id")


@pytest.fixture(scope="session")
def small_catalog():
    return generate_catalog(4)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def catalog8():
    return generate_catalog(8)


@pytest.fixture
def criterion(request):
    """Record one acceptance verdict; the terminal summary lists them in order."""
    number = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE[number] = (False, "did not finish")

    def record(detail: str) -> None:
        ACCEPTANCE[number] = (True, detail)

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE, key=lambda k: (isinstance(k, str), str(k).zfill(3))):
        ok, detail = ACCEPTANCE[n]
        name = f"criterion {n:>2}" if isinstance(n, int) else f"{n:<12}"
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}  {detail}")
