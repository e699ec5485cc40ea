import random

import pytest

from termrank.core import BinaryMatrix


def random_matrix(rng: random.Random, m: int, n: int, density: float = 0.4) -> BinaryMatrix:
    return BinaryMatrix.from_rows(
        [int(rng.random() < density) for _ in range(n)] for _ in range(m)
    )


@pytest.fixture
def rng():
    return random.Random(20240611)


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
