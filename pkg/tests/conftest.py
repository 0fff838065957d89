import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from _criteria import RESULTS


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
