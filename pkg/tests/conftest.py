import numpy as np
import pytest

from mcdm_compare import builtin_bank_dataset, builtin_camels_reference, published_rankings


@pytest.fixture(scope="session")
def banks():
    return builtin_bank_dataset().matrix


@pytest.fixture(scope="session")
def camels():
    return builtin_camels_reference()


@pytest.fixture(scope="session")
def published():
    return published_rankings()


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line per test; printed in the terminal summary."""
    record = {"name": request.node.name, "detail": ""}
    yield record
    ACCEPTANCE_LINES.append(record)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and "criterion" in item.fixturenames:
        item.funcargs["criterion"]["passed"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for rec in ACCEPTANCE_LINES:
        mark = "PASS" if rec.get("passed") else "FAIL"
        terminalreporter.write_line(f"{mark}  {rec['name']}  {rec['detail']}")
