import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from bressoud import Partition, ResiduePermutation  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, max_parts=8, max_part=30):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_parts))
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def perms(draw, max_d=5):
    d = draw(st.integers(1, max_d))
    return ResiduePermutation(tuple(draw(st.permutations(range(d)))))


@st.composite
def gapped(draw, d, max_parts=7):
    """A d-distinct partition built from its smallest part and the gaps above it."""
    m = draw(st.integers(0, max_parts))
    if m == 0:
        return Partition(())
    smallest = draw(st.integers(1, 12))
    gaps = draw(st.lists(st.integers(d, d + 10), min_size=m - 1, max_size=m - 1))
    parts = [smallest]
    for g in gaps:
        parts.append(parts[-1] + g)
    return Partition(tuple(reversed(parts)))


@st.composite
def perm_and_d_distinct(draw, max_d=5):
    pi = draw(perms(max_d))
    return pi, draw(gapped(pi.d))


# Acceptance criteria report one line each at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    if outcome.get_result().failed:
        item._failed = True
