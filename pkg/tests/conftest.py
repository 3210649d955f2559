import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        status, title, elapsed, detail = mod.RESULTS[num]
        line = f"{status} criterion {num:2d}: {title} ({elapsed:.2f}s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
