"""Shared fixtures: the acceptance suite records one verdict line per check."""

import pytest

CRITERION_LINES = []


@pytest.fixture
def criterion_report():
    """Record a '[PASS]/[FAIL] criterion N: detail' line for the final summary."""

    def _record(passed, number, detail):
        line = "[{}] criterion {}: {}".format("PASS" if passed else "FAIL", number, detail)
        CRITERION_LINES.append(line)
        print(line)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.line(line)
