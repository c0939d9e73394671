import pytest

_outcomes: dict[int, list[bool]] = {}


def _criterion(item):
    mark = item.get_closest_marker("criterion")
    return mark.args[0] if mark else None


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criterion = _criterion(item)


def pytest_runtest_logreport(report):
    n = getattr(report, "criterion", None)
    if n is None:
        return
    if report.when == "call":
        # an expected failure still counts against the criterion
        ok = report.passed and not hasattr(report, "wasxfail")
        _outcomes.setdefault(n, []).append(ok)
    elif report.failed or (report.skipped and hasattr(report, "wasxfail")):
        _outcomes.setdefault(n, []).append(False)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        verdict = "PASS" if all(_outcomes[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}")
