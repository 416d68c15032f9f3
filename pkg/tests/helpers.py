from __future__ import annotations

from mbqncompat import Task

# Filled by test_acceptance.py, printed by conftest at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def tasks(*pairs):
    return [Task(u, v) for u, v in pairs]
