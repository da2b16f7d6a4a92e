"""Collects acceptance-criterion outcomes and prints one line per criterion."""
import pytest

_criteria = {}   # n -> text
_owner = {}      # nodeid -> n
_failed = set()
_ran = set()


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            n, text = mark.args
            _criteria[n] = text
            _owner[item.nodeid] = n


def pytest_runtest_logreport(report):
    n = _owner.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or report.failed:
        _ran.add(n)
    if report.failed:
        _failed.add(n)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        if n not in _ran:
            verdict = "SKIP"
        else:
            verdict = "FAIL" if n in _failed else "PASS"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {_criteria[n]}")
