from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from babylon.graph import build

settings.register_profile("babylon", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("babylon")


@pytest.fixture(scope="session")
def b1000():
    return build(1000)


@pytest.fixture(scope="session")
def b2000():
    return build(2000)


_criteria: list[tuple[int, str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(getattr(item, "function", None), "criterion", None)
    if number is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append((number, item.function.title, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, seconds in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}  {verdict}  {title}  ({seconds:.2f} s)")
