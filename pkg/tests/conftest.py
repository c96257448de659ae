import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo one PASS/FAIL line per release criterion after the run."""
    for name, module in list(sys.modules.items()):
        lines = getattr(module, "ACCEPTANCE_VERDICTS", None)
        if lines and name.rsplit(".", 1)[-1] == "test_acceptance":
            terminalreporter.section("acceptance criteria")
            for line in lines:
                terminalreporter.write_line(line)
            break
