import pytest

from symtrace.matrices import IntMatrix

EXAMPLE_ROWS = ((2, 16, 12), (1, 6, 4), (3, 16, 10))


@pytest.fixture
def example3():
    return IntMatrix(EXAMPLE_ROWS)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
