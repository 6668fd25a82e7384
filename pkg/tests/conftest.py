import pytest

# criterion number -> (passed, measured detail); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def record():
    def _record(number, passed, detail):
        ACCEPTANCE[number] = (bool(passed), detail)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance summary")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        tr.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
    n_pass = sum(p for p, _ in ACCEPTANCE.values())
    tr.write_line(f"{n_pass}/{len(ACCEPTANCE)} criteria pass")
