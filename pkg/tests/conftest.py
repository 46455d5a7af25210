import numpy as np
import pytest

from acsim import _backend

ACCEPTANCE_LINES = []


@pytest.fixture(params=_backend.available())
def kernels(request):
    return _backend.load(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20021)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
