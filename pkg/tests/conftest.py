from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[str, str] = {}
_outcomes: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if getattr(item, "module", None) and item.module.__name__.endswith("test_acceptance"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _criteria[item.nodeid] = doc


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.when == "call" or report.failed:
        if _outcomes.get(report.nodeid) != "FAIL":
            _outcomes[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, doc in _criteria.items():
        label, _, desc = doc.partition(" ")
        terminalreporter.write_line(f"{label} {_outcomes.get(nodeid, 'NOT RUN')} {desc}")
