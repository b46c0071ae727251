from __future__ import annotations

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus: int, config) -> None:
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    seen: dict[int, tuple[str, str]] = {}
    for outcome, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            match = _CRITERION.search(getattr(report, "nodeid", ""))
            if match is None:
                continue
            number = int(match.group(1))
            # a FAIL from any phase wins over a PASS recorded for another phase
            if seen.get(number, ("", "PASS"))[1] != "FAIL":
                seen[number] = (match.group(2), label)
    if not seen:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for number in sorted(seen):
        name, label = seen[number]
        terminalreporter.write_line(f"  criterion {number:2d} ({name}): {label}")
