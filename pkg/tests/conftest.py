import pytest

_REPORT = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Collects one (name, passed, detail) line per acceptance check."""

    def record(name, passed, detail):
        _REPORT.append((name, bool(passed), detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _REPORT:
        return
    terminalreporter.section("acceptance")
    for name, ok, detail in _REPORT:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
