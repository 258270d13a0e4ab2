import re

_LINES = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m or report.when != "call":
        return
    n = int(m.group(1))
    detail = ""
    for line in report.capstdout.splitlines():
        if line.startswith(f"criterion {n}:"):
            detail = line.split(":", 1)[1].strip()
    status = "PASS" if report.passed else "FAIL"
    _LINES[n] = f"criterion {n:2d}: {status}  {detail}".rstrip()


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_LINES):
            terminalreporter.write_line(_LINES[n])
