import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    name = request.node.name
    _CRITERIA[name] = "FAIL"
    yield
    if request.node.rep_call.passed:
        _CRITERIA[name] = "PASS"


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    setattr(item, "rep_" + rep.when, rep)
    return rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        terminalreporter.write_line(f"{_CRITERIA[name]:4}  {name}")
