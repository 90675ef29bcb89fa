import pytest

from qutaxi import parse

# criterion name -> (passed, detail), filled by test_acceptance
ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = {}


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[ACCEPTANCE]


def pytest_terminal_summary(terminalreporter):
    results = terminalreporter.config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results):
        ok, detail = results[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def two_squares():
    return parse(".2+1-2-1+1+o1+2+1-2-")


@pytest.fixture
def unit_square():
    return parse(".1+2+1-2-")
