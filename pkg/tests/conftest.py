import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import re

_criteria: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m and (report.when == "call" or report.outcome != "passed"):
        _criteria.setdefault(m.group(1), []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria, key=int):
        results = _criteria[num]
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):>2}: {verdict} ({sum(results)}/{len(results)} checks)")
