"""Prints one PASS/FAIL line per acceptance criterion after the run."""

_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results, key=lambda n: int(n.split("_")[2])):
        number = name.split("_")[2]
        label = " ".join(name.split("_")[3:])
        verdict = "PASS" if _results[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number} ({label}): {verdict}")
