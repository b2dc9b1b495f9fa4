import pytest

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, float]] = []


@pytest.fixture
def criterion():
    """Record one acceptance verdict; the summary prints one line per criterion."""

    def record(number, title, ok, seconds=0.0):
        ACCEPTANCE_RESULTS.append((number, title, bool(ok), seconds))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, seconds in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({seconds:.2f}s)"
        )
