from __future__ import annotations

import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# one summary line per acceptance criterion, printed after the run
_CRITERIA: dict[str, tuple[str, str, float]] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props or report.when not in ("setup", "call"):
        return
    if report.when == "setup" and report.passed:
        return
    key = props["criterion"]
    status, title, secs = _CRITERIA.get(key, ("PASS", props.get("title", ""), 0.0))
    if not report.passed:
        status = "FAIL"
    _CRITERIA[key] = (status, title, secs + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=lambda k: int(k[1:])):
        status, title, secs = _CRITERIA[key]
        terminalreporter.write_line(f"{key} {status} ({secs:.2f}s) {title}")
