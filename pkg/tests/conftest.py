"""Shared acceptance bookkeeping.

test_acceptance.py registers one result per criterion through the
``record`` fixture; the hook below prints them as a block at the end of
the pytest run, one PASS/FAIL line each, regardless of capture settings.
"""

import pytest

_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(criterion: int, passed: bool, detail: str) -> None:
        _RESULTS[criterion] = (passed, detail)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        passed, detail = _RESULTS[n]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"CRITERION {n}: {status} - {detail}")
