import pytest

# (criterion, part) -> (passed, detail)
_ACCEPTANCE: dict[tuple[int, str], tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def acceptance_log():
    def log(criterion: int, passed: bool, detail: str, part: str = "") -> None:
        _ACCEPTANCE[criterion, part] = (passed, detail)
        tag = f"{criterion}{part}"
        print(f"criterion {tag}: {'PASS' if passed else 'FAIL'} - {detail}")

    return log


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted({c for c, _ in _ACCEPTANCE}):
        parts = sorted((p, v) for (c, p), v in _ACCEPTANCE.items() if c == criterion)
        ok = all(v[0] for _, v in parts)
        detail = "; ".join((f"[{p}] " if p else "") + f"{'ok' if v[0] else 'FAILED'}: {v[1]}" for p, v in parts)
        terminalreporter.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} | {detail}")
