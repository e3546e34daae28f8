import contextlib
import time

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def record(label):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _ACCEPTANCE.append(f"FAIL  {label}  ({time.perf_counter() - start:.2f}s)")
            raise
        _ACCEPTANCE.append(f"PASS  {label}  ({time.perf_counter() - start:.2f}s)")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE:
        terminalreporter.write_line(line)
