import os

from hypothesis import settings

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

import pytest

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when == "teardown":
        return
    num, title = mark.args
    prev = _criteria.get(num, (title, "PASS"))[1]
    if rep.failed or (rep.when == "call" and rep.skipped):
        _criteria[num] = (title, "FAIL")
    elif rep.when == "call":
        _criteria[num] = (title, prev)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, verdict = _criteria[num]
        terminalreporter.write_line("criterion %2d  %s  %s" % (num, verdict, title))
