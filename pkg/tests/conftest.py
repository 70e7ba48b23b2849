import pytest

from potram import potential

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True)
def _fresh_memo():
    # memoized answers must not leak between tests that compare routes
    potential.clear_cache()
    yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
