from __future__ import annotations

import random
from collections import defaultdict

import pytest
from hypothesis import HealthCheck, settings

from pisotexp import make_spec

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

DEFAULT_SEED = 20241018

# criterion label -> list of (test id, passed)
_ACCEPTANCE: dict[str, list[tuple[str, bool]]] = defaultdict(list)


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized suites")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): ties a test to an acceptance criterion")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture(scope="session")
def golden():
    return make_spec([1, 1])


@pytest.fixture(scope="session")
def three():
    return make_spec([1, 3])


@pytest.fixture(scope="session")
def cubic():
    return make_spec([1, 0, 1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _ACCEPTANCE[label].append((item.nodeid, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
        runs = _ACCEPTANCE[label]
        ok = all(passed for _, passed in runs)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({len(runs)} checks)")
