import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    callspec = getattr(request.node, "callspec", None)
    if callspec is not None:
        label = f"{label} [{callspec.id}]"
    yield
    report = getattr(request.node, "rep_call", None)
    ok = report is not None and report.passed
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
