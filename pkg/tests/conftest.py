import pytest

NOTES = []


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running checks (census at full depth, big suites)"
    )


def pytest_terminal_summary(terminalreporter):
    if NOTES:
        terminalreporter.section("notes")
        for line in NOTES:
            terminalreporter.line(line)


@pytest.fixture
def notes():
    """Lines to print in the terminal summary after the run."""
    return NOTES


@pytest.fixture(scope="session")
def small_bipartite_catalog():
    """Connected bipartite graphs with e <= 8, up to isomorphism."""
    from util_graphs import connected_bipartite_up_to_iso

    return connected_bipartite_up_to_iso(8)
