import pytest

from wtwm import build_c_array, effective_transform

ACCEPTANCE_REPORT = []


@pytest.fixture(scope="session")
def wt_text():
    return effective_transform(b"wavelettree")


@pytest.fixture(scope="session")
def wt_c(wt_text):
    return build_c_array(wt_text)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_REPORT:
        terminalreporter.write_line(line)
