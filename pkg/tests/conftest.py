from __future__ import annotations

import pytest

# criterion number -> (passed, detail), filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(number: int, failures: list[str], detail: str = "", note: str = "") -> None:
        if failures:
            shown = "; ".join(failures[:4]) + (f"; ... ({len(failures)} total)" if len(failures) > 4 else "")
            ACCEPTANCE[number] = (False, shown + (f" [{note}]" if note else ""))
        else:
            ACCEPTANCE[number] = (True, detail)
        print(f"criterion {number}: {'PASS' if not failures else 'FAIL'} {ACCEPTANCE[number][1]}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
