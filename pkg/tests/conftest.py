from fractions import Fraction

import pytest

from qumbral.scalars import Field

SYM = Field.symbolic()

_ACCEPTANCE_LINES = []


@pytest.fixture
def sym():
    return SYM


@pytest.fixture
def num():
    return Field.numeric(Fraction(1, 2), Fraction(-3, 2))


@pytest.fixture
def criterion(request):
    """Records a pass/fail line per acceptance criterion for the summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield label
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    line = f"{status}  {label}"
    _ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
