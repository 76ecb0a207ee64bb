import time
from contextlib import contextmanager

import pytest

_CRITERIA = []


@contextmanager
def _record(label, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        status = "PASS" if ok else "FAIL"
        _CRITERIA.append(f"{status} {label} ({elapsed:.2f}s, budget {budget:g}s)")
        print(_CRITERIA[-1])


@pytest.fixture
def criterion():
    """``with criterion("AC1 ...", budget_s): ...`` records a pass/fail line."""
    return _record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
