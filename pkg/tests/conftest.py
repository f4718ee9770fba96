"""Collects acceptance verdicts and prints one PASS/FAIL line per criterion.

A test opts in by carrying a `_criterion = (number, description)` attribute,
set by the `criterion` decorator in test_acceptance.py.  Setup errors count
as failures so a criterion never silently disappears from the summary.
"""

import pytest

_verdicts = {}


def _marker(item):
    fn = getattr(item, "function", None)
    return getattr(fn, "_criterion", None)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = _marker(item)
    if mark is None:
        return
    num, desc = mark
    if rep.when == "call":
        _verdicts[num] = (desc, rep.passed)
    elif rep.when == "setup" and not rep.passed:
        _verdicts[num] = (desc, False)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_verdicts):
        desc, ok = _verdicts[num]
        word = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} [{word}] {desc}")
