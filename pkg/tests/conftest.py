import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from sqdirac.solutions import make_mode

settings.register_profile(
    "repo",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

REF = (0.3, 0.4, 1.2, 1.0)


@pytest.fixture
def ref_mode():
    return make_mode(*REF)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
