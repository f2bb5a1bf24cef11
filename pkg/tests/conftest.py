import pytest
from hypothesis import settings, strategies as st

from fockspace.partitions import partitions_up_to

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_PARTITIONS = list(partitions_up_to(7))


def partitions(max_size=7):
    return st.sampled_from(list(partitions_up_to(max_size)))


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
