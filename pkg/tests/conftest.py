import pytest

from maxcross.moment_curve import moment_point

SAMPLE_HEX = "da30 9d36 5842 4c48 3d5a 0db1 37d2 f335"
SAMPLE_POINTS = ((218, 48), (157, 54), (88, 66), (76, 72),
                   (61, 90), (13, 177), (55, 210), (243, 53))


@pytest.fixture
def sample_points():
    return SAMPLE_POINTS


@pytest.fixture
def moment8():
    return [moment_point(t, 4) for t in range(1, 9)]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, title, detail = results[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
