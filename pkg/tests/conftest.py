from pathlib import Path

import pytest

from tustrat import load_instance

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# filled by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / f"{name}.json"


@pytest.fixture
def load():
    return lambda name: load_instance(FIXTURES / f"{name}.json")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
