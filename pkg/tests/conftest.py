import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fano95.enumeration import enumerate_families  # noqa: E402
from fano95.registry import load_registry  # noqa: E402


@pytest.fixture(scope="session")
def records():
    return load_registry()


@pytest.fixture(scope="session")
def by_n(records):
    return {r.n: r for r in records}


@pytest.fixture(scope="session")
def enumerated():
    return enumerate_families()


ACCEPTANCE_RESULTS: list[tuple[str, str, bool]] = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    yield
    failed = getattr(request.node, "_call_failed", True)
    ACCEPTANCE_RESULTS.append((number, title, not failed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item._call_failed = rep.failed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(ACCEPTANCE_RESULTS, key=lambda t: int(t[0])):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")
