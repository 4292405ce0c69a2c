import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semitrace.core import NumericalSemigroup
from semitrace.enumeration import minimal_generating_sets, threegen_sets

_ACCEPTANCE: list[str] = []


@contextmanager
def criterion(tag: str, title: str, limit: float | None = None):
    """Record one PASS/FAIL line per acceptance criterion; a run over its
    time limit counts as a failure."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        timed_out = limit is not None and elapsed > limit
        status = "PASS" if ok and not timed_out else "FAIL"
        budget = f" (limit {limit:g}s)" if limit is not None else ""
        line = f"[{status}] {tag} {title}: {elapsed:.2f}s{budget}"
        _ACCEPTANCE.append(line)
        print(line)
    assert not timed_out, f"{tag} took {elapsed:.1f}s, limit {limit}s"


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def threegen60():
    """Every 3-generated numerical semigroup with largest generator <= 60."""
    return [NumericalSemigroup(g) for g in threegen_sets(60)]


@pytest.fixture(scope="session")
def small_corpus():
    """All numerical semigroups with generators <= 16 and at most 5 of them."""
    return [NumericalSemigroup(g) for g in minimal_generating_sets(16, 5)]
