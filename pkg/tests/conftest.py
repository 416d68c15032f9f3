from __future__ import annotations

import pytest
from helpers import ACCEPTANCE_LINES

from mbqncompat import path_graph, ring_graph


@pytest.fixture
def path7():
    return path_graph(7)


@pytest.fixture
def ring7():
    return ring_graph(7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
