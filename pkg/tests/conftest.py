import numpy as np
import pytest

from abelian_border import BinaryWord


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_word(rng, n):
    return BinaryWord(rng.integers(0, 2, n, dtype=np.uint8))


_criteria: list[tuple[str, bool, str]] = []


def record_criterion(name, ok, detail=""):
    _criteria.append((name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
