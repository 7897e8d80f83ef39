import pytest

_criteria: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or rep.failed):
        _criteria.append((marker.args[0], marker.args[1], rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_criteria):
        flag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {flag}  ({duration:6.2f}s)  {title}")
