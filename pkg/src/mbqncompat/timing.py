"""Discrete-time feedforward race between concurrently arriving tasks.

Each task's origin broadcasts its measurement program at its arrival tick.
An instruction for node ``x`` lands ``dist(origin, x)`` ticks later, and the
target learns it is an endpoint after the same delay. A node acts on the
first instruction that reaches it, unless it already knows it is an
endpoint of some task, in which case it refuses every instruction. Nodes
never wait or coordinate, so incompatible tasks can destroy each other.

Events at the same tick are ordered: endpoint notifications before
instructions, then by arrival time, then schedule index, then node id.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from mbqncompat.errors import UnknownVertexError
from mbqncompat.graph import Graph, bfs_distances
from mbqncompat.graph_state import PauliBasis, ResourceState, measure
from mbqncompat.tasks import Task, compile_repeater_program, default_path, task_satisfied

_NOTIFY, _INSTRUCT = 0, 1


@dataclass(frozen=True)
class RaceEntry:
    task: Task
    arrival_time: int = 0

    def __post_init__(self) -> None:
        if self.arrival_time < 0 or int(self.arrival_time) != self.arrival_time:
            raise ValueError("arrival times are non-negative integer ticks")


@dataclass(frozen=True)
class RaceSchedule:
    entries: tuple[RaceEntry, ...]
    hop_delay: int = 1

    @classmethod
    def of(cls, *pairs: tuple[Task, int]) -> RaceSchedule:
        return cls(tuple(RaceEntry(t, a) for t, a in pairs))


@dataclass(frozen=True)
class Commitment:
    task: int
    basis: PauliBasis
    time: int


@dataclass(frozen=True)
class RaceOutcome:
    satisfied: frozenset[int]
    commitments: dict[int, Commitment] = field(default_factory=dict)
    final_state: ResourceState | None = None


def run_race(g: Graph, schedule: RaceSchedule) -> RaceOutcome:
    """Play out the schedule and report which tasks end as isolated Bell pairs."""
    events = []
    for i, entry in enumerate(schedule.entries):
        t, t0 = entry.task, entry.arrival_time
        for x in (t.origin, t.target):
            if x not in g:
                raise UnknownVertexError(x)
        dist = bfs_distances(g, t.origin)
        events.append((t0, _NOTIFY, t0, i, t.origin, None))
        if t.target in dist:
            events.append((t0 + schedule.hop_delay * dist[t.target], _NOTIFY, t0, i, t.target, None))
        path = default_path(g, t)
        if path is None:
            continue
        for node, basis in compile_repeater_program(g, path).steps:
            events.append((t0 + schedule.hop_delay * dist[node], _INSTRUCT, t0, i, node, basis))
    events.sort(key=lambda e: e[:5])

    state = ResourceState(g)
    endpoints: set[int] = set()
    commitments: dict[int, Commitment] = {}
    for time, kind, _, i, node, basis in events:
        if kind == _NOTIFY:
            endpoints.add(node)
        elif node not in state.consumed and node not in endpoints:
            state = measure(state, node, basis)
            commitments[node] = Commitment(i, basis, time)

    satisfied = frozenset(i for i, e in enumerate(schedule.entries) if task_satisfied(state, e.task))
    return RaceOutcome(satisfied, commitments, state)


def partial_compatible(g: Graph, t1: Task, t2: Task, dt: int) -> bool:
    """True when every arrival pattern within ``dt`` ticks serves at least one task.

    Both arrival orders are checked; the first task arrives at tick 0 and the
    second at every tick in ``0..dt``.
    """
    if dt < 0:
        raise ValueError("dt must be non-negative")
    for first, second in ((t1, t2), (t2, t1)):
        for offset in range(dt + 1):
            outcome = run_race(g, RaceSchedule.of((first, 0), (second, offset)))
            if not outcome.satisfied:
                return False
    return True
