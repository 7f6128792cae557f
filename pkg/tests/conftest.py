import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; call with (ok, detail) before asserting."""

    def record(ok: bool, detail: str):
        label = request.node.name
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
