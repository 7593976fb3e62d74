"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

from collections import defaultdict

import pytest

_outcomes = defaultdict(list)
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    _titles[number] = title
    xfail = hasattr(report, "wasxfail")
    if report.when == "call" or (report.when == "setup" and not report.passed):
        # an expected failure counts as a known gap, not a pass
        _outcomes[number].append((item.name, report.outcome, report.wasxfail if xfail else None))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_outcomes):
        results = _outcomes[number]
        failed = [name for name, outcome, xfail in results if outcome == "failed"]
        gaps = [reason.removeprefix("reason: ") for _, _, reason in results if reason]
        status = "FAIL" if failed or gaps else "PASS"
        line = f"criterion {number:2d} {status}: {_titles[number]}"
        if failed:
            line += f" (failed: {', '.join(failed)})"
        if gaps:
            line += f" (known counterexample: {'; '.join(gaps)})"
        tr.write_line(line)
