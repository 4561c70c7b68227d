import time
from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[str, bool, float]] = []


@pytest.fixture
def criterion():
    @contextmanager
    def record(name: str, limit_s: float):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - t0
            assert elapsed < limit_s, f"{name} took {elapsed:.1f}s, limit {limit_s}s"
            ok = True
        finally:
            _RESULTS.append((name, ok, time.perf_counter() - t0))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s)")
