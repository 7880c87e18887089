import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    entry = {"name": request.node.name, "detail": ""}
    ACCEPTANCE.append(entry)

    def note(detail):
        entry["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    entry["passed"] = rep is not None and rep.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for e in ACCEPTANCE:
        status = "PASS" if e.get("passed") else "FAIL"
        terminalreporter.write_line(f"{status}  {e['name']}  {e['detail']}")
