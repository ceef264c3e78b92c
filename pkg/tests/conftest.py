import pytest
from hypothesis import HealthCheck, settings

from updown import builtin

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


# -- shared fixtures --------------------------------------------------------------------


@pytest.fixture(scope="session")
def kingman():
    return builtin("partitions-kingman", max_rank=6)


@pytest.fixture(scope="session")
def young():
    return builtin("partitions-unit", max_rank=8)



# -- acceptance summary -----------------------------------------------------------------

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    # count the call phase, plus any setup or teardown failure
    if mark is None or (report.when != "call" and not report.failed):
        return
    n, title = mark.args
    entry = _criteria.setdefault(n, {"title": title, "passed": 0, "failed": 0})
    entry["failed" if report.failed else "passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        verdict = "FAIL" if e["failed"] else "PASS"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {e['title']} ({e['passed']} passed, {e['failed']} failed)")
