import contextlib

_ACCEPTANCE: list[str] = []


@contextlib.contextmanager
def criterion(number, title):
    """Record a PASS/FAIL line for an acceptance criterion; failures still raise."""
    notes: list[str] = []
    try:
        yield notes
    except BaseException:
        _ACCEPTANCE.append(f"FAIL  criterion {number}: {title}" + (f" ({'; '.join(notes)})" if notes else ""))
        raise
    _ACCEPTANCE.append(f"PASS  criterion {number}: {title}" + (f" ({'; '.join(notes)})" if notes else ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
