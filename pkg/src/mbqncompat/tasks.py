"""Entanglement tasks and the repeater-path extraction protocol."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from mbqncompat.errors import LiteralParseError, NotAPathError, TaskError, UnknownVertexError
from mbqncompat.graph import Graph, Path, bfs_distances, is_simple_path, neighbors
from mbqncompat.graph_state import PauliBasis, ResourceState, measure


@dataclass(frozen=True, order=True)
class Task:
    """Request for an EPR pair between ``origin`` (the requester) and ``target``."""

    origin: int
    target: int

    def __post_init__(self) -> None:
        if self.origin == self.target:
            raise TaskError(f"task endpoints must differ, got {self.origin}->{self.target}")

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset((self.origin, self.target))

    def __str__(self) -> str:
        return f"{self.origin}->{self.target}"


TaskSet = Sequence[Task]


def parse_task(text: str, column: int = 1) -> Task:
    """Parse a ``u->v`` literal."""
    left, sep, right = text.partition("->")
    if not sep:
        raise LiteralParseError(f"expected 'u->v', got {text.strip()!r}", 1, column)
    try:
        u, v = int(left), int(right)
    except ValueError:
        raise LiteralParseError(f"invalid task {text.strip()!r}", 1, column) from None
    try:
        return Task(u, v)
    except TaskError as exc:
        raise LiteralParseError(str(exc), 1, column) from None


def parse_tasks(text: str) -> list[Task]:
    """Parse a comma-separated list of ``u->v`` literals."""
    tasks = []
    col = 1
    for chunk in text.split(","):
        lead = len(chunk) - len(chunk.lstrip())
        if not chunk.strip():
            raise LiteralParseError("empty task", 1, col)
        tasks.append(parse_task(chunk, col + lead))
        col += len(chunk) + 1
    return tasks


def format_tasks(tasks: Iterable[Task]) -> str:
    return ",".join(str(t) for t in tasks)


@dataclass(frozen=True)
class MeasurementProgram:
    """Ordered measurements that isolate ``path`` into a Bell pair.

    Z steps come first in ascending vertex order, then Y steps along the path.
    """

    path: Path
    steps: tuple[tuple[int, PauliBasis], ...]

    @property
    def z_nodes(self) -> frozenset[int]:
        return frozenset(v for v, b in self.steps if b is PauliBasis.Z)

    @property
    def y_nodes(self) -> frozenset[int]:
        return frozenset(v for v, b in self.steps if b is PauliBasis.Y)

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def feasible(g: Graph, t: Task) -> bool:
    """True when the endpoints lie in one connected component."""
    if t.target not in g:
        raise UnknownVertexError(t.target)
    return t.target in bfs_distances(g, t.origin)


def default_path(g: Graph, t: Task, max_len: int | None = None) -> Path | None:
    """Shortest path, ties broken lexicographically; ``None`` if infeasible.

    Same as the first entry of :func:`enumerate_simple_paths`, found by
    walking down the BFS distance-to-target layers and always stepping to
    the smallest eligible neighbor.
    """
    if t.origin not in g:
        raise UnknownVertexError(t.origin)
    dist = bfs_distances(g, t.target)
    if t.origin not in dist:
        return None
    if max_len is not None and dist[t.origin] + 1 > max_len:
        return None
    path = [t.origin]
    while path[-1] != t.target:
        here = dist[path[-1]]
        path.append(min(y for y in neighbors(g, path[-1]) if dist.get(y) == here - 1))
    return tuple(path)


def compile_repeater_program(g: Graph, path: Sequence[int]) -> MeasurementProgram:
    path = tuple(path)
    if not is_simple_path(g, path):
        raise NotAPathError(f"{path} is not a simple path in the graph")
    on_path = set(path)
    z = set()
    for p in path:
        z |= neighbors(g, p)
    z -= on_path
    steps = [(v, PauliBasis.Z) for v in sorted(z)]
    steps += [(v, PauliBasis.Y) for v in path[1:-1]]
    return MeasurementProgram(path, tuple(steps))


def execute_program(state: ResourceState, prog: MeasurementProgram) -> ResourceState:
    """Apply every step in order; a consumed step vertex raises."""
    for v, basis in prog.steps:
        state = measure(state, v, basis)
    return state


def task_satisfied(state: ResourceState, t: Task) -> bool:
    """True when (origin, target) form an isolated two-vertex component."""
    g = state.graph
    u, v = t.origin, t.target
    if u not in g or v not in g:
        return False
    return neighbors(g, u) == {v} and neighbors(g, v) == {u}
