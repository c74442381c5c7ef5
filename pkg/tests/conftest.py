ACCEPTANCE_LINES = []


def record_criterion(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = "[%s] criterion %d: %s" % (status, num, name)
    if detail:
        line += " (%s)" % detail
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
