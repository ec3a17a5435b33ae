"""Prints one pass/fail line per acceptance criterion after the run."""

import re

_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call":
        _results[report.nodeid] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _results[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_results):
        m = re.search(r"test_criterion_(\d+)_(\w+)", nodeid)
        if not m:
            continue
        number, slug = m.groups()
        verdict = "PASS" if _results[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number} ({slug.replace('_', ' ')}): {verdict}")
