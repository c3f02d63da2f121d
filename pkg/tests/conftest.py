import time
from contextlib import contextmanager

import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Time a block of checks and record one PASS/FAIL line for it."""

    @contextmanager
    def run(number: int, title: str, limit: float):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            if ok and elapsed >= limit:
                ok = False
                title += f" (over the {limit:g} s limit)"
            line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{elapsed:.2f} s]"
            _LINES.append(line)
            print(line)
        assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit:g} s"

    return run


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)
