import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_outcomes = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        key = (int(m.group(1)), m.group(2))
        # a failure in any phase sticks
        if _outcomes.get(key) != "FAIL":
            _outcomes[key] = "PASS" if report.outcome == "passed" else (
                "SKIP" if report.outcome == "skipped" else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    by_criterion = {}
    for (num, name), outcome in sorted(_outcomes.items()):
        by_criterion.setdefault(num, []).append((name, outcome))
    for num, parts in by_criterion.items():
        verdict = "FAIL" if any(o == "FAIL" for _, o in parts) else (
            "SKIP" if all(o == "SKIP" for _, o in parts) else "PASS")
        detail = ", ".join(f"{n}={o}" for n, o in parts)
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  ({detail})")
