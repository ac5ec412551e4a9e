import random

import pytest

from circham import Digraph

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = dict(report.user_properties).get("criterion")
    if name is not None:
        _criteria[name] = _criteria.get(name, True) and report.passed


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _criteria.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")


def random_digraph(rng: random.Random, n: int, density: float) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n)
                       if u != v and rng.random() < density])


@pytest.fixture(scope="session")
def random_corpus():
    """200 seeded random digraphs on 2..12 vertices, arc density 0.3."""
    rng = random.Random(20260101)
    return [random_digraph(rng, rng.randint(2, 12), 0.3) for _ in range(200)]
