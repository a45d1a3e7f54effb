import pytest

_RESULTS: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, limit_s, title): acceptance criterion with a time limit")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, limit, title = mark.args
    if rep.when == "setup" and rep.passed:
        return
    _RESULTS[number] = {
        "title": title,
        "limit": limit,
        "passed": rep.passed,
        "seconds": rep.duration if rep.when == "call" else 0.0,
    }


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        r = _RESULTS[n]
        verdict = "PASS" if r["passed"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {n:2d} {verdict}  {r['title']}  ({r['seconds']:.2f} s, limit {r['limit']} s)"
        )
