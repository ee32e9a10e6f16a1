import pytest

_ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run slow Katzman instances (2,3) and (3,2)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    class Recorder:
        def __init__(self):
            self.detail = ""

        def __call__(self, number, title):
            self.number, self.title = number, title
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            status = "PASS" if exc_type is None else "FAIL"
            line = f"[{status}] criterion {self.number}: {self.title}"
            if self.detail:
                line += f" -- {self.detail}"
            _ACCEPTANCE_LINES.append(line)
            print(line)
            return False

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
