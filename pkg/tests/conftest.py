import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from gsaca.text import make_text

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

RUNNING = b"acedcebceece"
RUNNING_SA = [12, 0, 6, 10, 4, 1, 7, 3, 11, 5, 9, 2, 8]
RUNNING_PSS = [-1, 0, 1, 1, 0, 4, 0, 6, 7, 7, 6, 10, -1]
RUNNING_NSS = [12, 4, 3, 4, 6, 6, 12, 10, 9, 10, 12, 12, 13]
RUNNING_STARTS = [0, 1, 2, 3, 5, 6, 7, 8]
RUNNING_PARTITION = [[12], [0], [6], [4, 10], [1], [7], [3], [2, 5, 8, 9, 11]]


@pytest.fixture
def running():
    return make_text(RUNNING)


def random_bytes(rng, n, sigma):
    return (rng.integers(0, sigma, n) + 1).astype(np.uint8).tobytes()


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
