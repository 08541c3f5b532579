import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    record = {"label": request.node.name, "detail": ""}
    yield record
    call = getattr(request.node, "rep_call", None)
    ok = call is not None and call.passed
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {record['label']} {record['detail']}".rstrip())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
