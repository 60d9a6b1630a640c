import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import kerala_game  # noqa: E402


@pytest.fixture
def rs1_case1():
    return kerala_game("RS1", 1)


@pytest.fixture
def rs2_case1():
    return kerala_game("RS2", 1)


@pytest.fixture
def rs2_case2():
    return kerala_game("RS2", 2)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
