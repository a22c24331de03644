import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is set by the hook below."""

    def register(label):
        ACCEPTANCE[request.node.nodeid] = [label, None]

    return register


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    entry = ACCEPTANCE.get(item.nodeid)
    if entry is not None and rep.when == "call":
        entry[1] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in ACCEPTANCE.values():
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {label}")
