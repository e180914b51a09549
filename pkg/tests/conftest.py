import pytest

# Filled by tests/test_acceptance.py: criterion id -> (passed, description).
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.rstrip("ab")), k)):
        ok, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key:<3} {'PASS' if ok else 'FAIL'}  {text}")
