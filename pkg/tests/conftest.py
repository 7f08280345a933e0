import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


class Recorder:
    def __call__(self, number: int, ok: bool | None, detail: str):
        status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        _RESULTS[number] = (status, detail)
        print(f"criterion {number:2d}: {status} - {detail}")


@pytest.fixture(scope="session")
def record():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, detail = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status} - {detail}")
