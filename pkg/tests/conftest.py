import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reference import ANTHEM, CODE, PUBLISHED_TABLE, REFERENCE_CIPHERTEXT  # noqa: E402

# nodeid -> (criterion number, title), and the recorded outcome once run
_pending: dict[str, tuple[str, str]] = {}
_criteria: dict[str, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    item_marker = _pending.get(report.nodeid)
    if item_marker:
        _criteria[report.nodeid] = (*item_marker, report.outcome.upper())


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _pending[item.nodeid] = (str(m.args[0]), m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome in sorted(_criteria.values(), key=lambda r: int(r[0])):
        verdict = {"PASSED": "PASS", "SKIPPED": "SKIP"}.get(outcome, "FAIL")
        terminalreporter.write_line(f"criterion {num:>2}  {verdict}  {title}")


@pytest.fixture
def code():
    return CODE


@pytest.fixture
def anthem():
    return ANTHEM


@pytest.fixture
def reference_ct():
    return REFERENCE_CIPHERTEXT


@pytest.fixture
def published_table():
    return PUBLISHED_TABLE
