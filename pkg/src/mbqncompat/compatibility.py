"""Worst-case and supplemented compatibility of concurrent tasks.

A task set is worst-case compatible on ``G`` when one joint choice of paths
exists, one per task, such that the paths are pairwise vertex-disjoint and
no edge of ``G`` joins two different paths. The supplemented variant
allows up to ``k`` on-demand EPR pairs between adjacent nodes, spent either
as a swap chain that serves a task outright or as a fission that deletes
one resource edge.

Witness search only considers chordless paths. Shortcutting a chord keeps
the endpoints and shrinks the vertex set, so this never loses a solution,
and the repeater protocol applied to a chordless path always succeeds.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from mbqncompat.errors import UnknownVertexError
from mbqncompat.graph import (
    Edge,
    Graph,
    Path,
    enumerate_simple_paths,
    is_induced_path,
    is_simple_path,
    neighbors,
    pairwise_set_distance,
    remove_edge,
)
from mbqncompat.tasks import Task

DISJOINTNESS = "disjointness"
SEPARABILITY = "separability"
NO_PATH = "no-path"

CHAIN = "chain"
FISSION = "fission"


@dataclass(frozen=True)
class PathAssignment:
    """Witness paths aligned with the task list.

    ``None`` marks a task served entirely by a supplemental chain.
    """

    paths: tuple[Path | None, ...]


@dataclass(frozen=True)
class CompatibilityVerdict:
    compatible: bool
    witness: PathAssignment | None = None
    violated: str | None = None

    def __post_init__(self) -> None:
        if self.compatible != (self.witness is not None) or self.compatible == (self.violated is not None):
            raise ValueError("verdict needs a witness iff compatible and a violation tag iff not")

    def __bool__(self) -> bool:
        return self.compatible


@dataclass(frozen=True)
class Placement:
    edge: Edge
    role: str
    task: int | None = None


@dataclass(frozen=True)
class SupplementPlan:
    placements: tuple[Placement, ...] = ()

    @property
    def cost(self) -> int:
        return len(self.placements)

    @property
    def chain_tasks(self) -> frozenset[int]:
        return frozenset(p.task for p in self.placements if p.role == CHAIN)

    @property
    def fission_edges(self) -> tuple[Edge, ...]:
        return tuple(p.edge for p in self.placements if p.role == FISSION)

    def apply_fissions(self, g: Graph) -> Graph:
        for u, v in self.fission_edges:
            g = remove_edge(g, u, v)
        return g

    def describe(self) -> str:
        if not self.placements:
            return "no supplemental pairs"
        parts = []
        for p in self.placements:
            u, v = p.edge
            if p.role == CHAIN:
                parts.append(f"chain ({u},{v}) for task {p.task}")
            else:
                parts.append(f"fission ({u},{v})")
        return "; ".join(parts)


def _check_endpoints(g: Graph, tasks: Sequence[Task]) -> None:
    for t in tasks:
        for x in (t.origin, t.target):
            if x not in g:
                raise UnknownVertexError(x)


@lru_cache(maxsize=65536)
def _candidates(g: Graph, u: int, v: int, max_len: int | None) -> tuple[Path, ...]:
    return tuple(p for p in enumerate_simple_paths(g, u, v, max_len) if is_induced_path(g, p))


def _assign(
    g: Graph,
    cands: Sequence[tuple[Path, ...]],
    budget: float,
) -> tuple[list[Path], list[Edge]] | None:
    """Backtrack over candidate paths in order.

    Paths must be vertex-disjoint. Every edge joining two chosen paths costs
    one unit; the total may not exceed ``budget``. Returns the first joint
    choice found and its crossing edges.
    """
    chosen: list[Path] = []
    crossing: list[Edge] = []
    used: set[int] = set()

    def step(i: int, spent: int) -> bool:
        if i == len(cands):
            return True
        for p in cands[i]:
            if not used.isdisjoint(p):
                continue
            new = [(min(x, y), max(x, y)) for x in p for y in neighbors(g, x) if y in used]
            if spent + len(new) > budget:
                continue
            chosen.append(p)
            crossing.extend(new)
            used.update(p)
            if step(i + 1, spent + len(new)):
                return True
            chosen.pop()
            del crossing[len(crossing) - len(new) :]
            used.difference_update(p)
        return False

    if step(0, 0):
        return list(chosen), sorted(crossing)
    return None


def worst_case_compatible(g: Graph, tasks: Sequence[Task], max_len: int | None = None) -> CompatibilityVerdict:
    """Decide whether ``tasks`` can all be served with no coordination.

    Searches jointly for one path per task, in arrival order, that are
    pairwise vertex-disjoint and at distance at least 2 from each other.
    When none exists, ``violated`` is ``"no-path"`` if some task is
    infeasible, ``"disjointness"`` if even vertex-disjoint paths do not
    exist, and ``"separability"`` otherwise.
    """
    tasks = tuple(tasks)
    if not tasks:
        raise ValueError("task set must be nonempty")
    _check_endpoints(g, tasks)
    return _worst_case(g, tasks, max_len)


@lru_cache(maxsize=65536)
def _worst_case(g: Graph, tasks: tuple[Task, ...], max_len: int | None) -> CompatibilityVerdict:
    cands = [_candidates(g, t.origin, t.target, max_len) for t in tasks]
    if any(not c for c in cands):
        return CompatibilityVerdict(False, violated=NO_PATH)
    found = _assign(g, cands, 0)
    if found is not None:
        return CompatibilityVerdict(True, PathAssignment(tuple(found[0])))
    if _assign(g, cands, math.inf) is None:
        return CompatibilityVerdict(False, violated=DISJOINTNESS)
    return CompatibilityVerdict(False, violated=SEPARABILITY)


def interval_compatible_1d(n: int, tasks: Sequence[Task]) -> CompatibilityVerdict:
    """Closed-form verdict on the path graph 1-2-...-n.

    Each task occupies the interval between its endpoints. Sorted by left
    end, consecutive intervals need ``right + 2 <= next_left``.
    """
    tasks = tuple(tasks)
    if not tasks:
        raise ValueError("task set must be nonempty")
    for t in tasks:
        for x in (t.origin, t.target):
            if not 1 <= x <= n:
                raise UnknownVertexError(x)
    spans = sorted((min(t.origin, t.target), max(t.origin, t.target)) for t in tasks)
    gaps = [nxt[0] - cur[1] for cur, nxt in zip(spans, spans[1:])]
    if any(gap <= 0 for gap in gaps):
        return CompatibilityVerdict(False, violated=DISJOINTNESS)
    if any(gap == 1 for gap in gaps):
        return CompatibilityVerdict(False, violated=SEPARABILITY)
    paths = []
    for t in tasks:
        step = 1 if t.target > t.origin else -1
        paths.append(tuple(range(t.origin, t.target + step, step)))
    return CompatibilityVerdict(True, PathAssignment(tuple(paths)))


def gk_compatible(
    g: Graph, tasks: Sequence[Task], k: int, max_len: int | None = None
) -> tuple[CompatibilityVerdict, SupplementPlan | None]:
    """Compatibility when up to ``k`` one-hop EPR pairs may be added on demand.

    Plans are searched in order of increasing cost, so the returned plan is
    a cheapest one. Within a cost level, chain-served subsets are tried by
    size and then index order. A chain for task ``i`` costs the hop count of
    its default shortest path and frees that task from every constraint;
    the remaining tasks need disjoint paths whose crossing edges are all
    removed by fission.
    """
    if k < 0:
        raise ValueError("supplement budget k must be non-negative")
    tasks = tuple(tasks)
    if not tasks:
        raise ValueError("task set must be nonempty")
    _check_endpoints(g, tasks)
    return _gk(g, tasks, k, max_len)


@lru_cache(maxsize=65536)
def _gk(
    g: Graph, tasks: tuple[Task, ...], k: int, max_len: int | None
) -> tuple[CompatibilityVerdict, SupplementPlan | None]:
    base = _worst_case(g, tasks, max_len)
    if base.compatible:
        return base, SupplementPlan()
    cands = [_candidates(g, t.origin, t.target, max_len) for t in tasks]
    chains: dict[int, Path] = {}
    for i, c in enumerate(cands):
        if c and len(c[0]) - 1 <= k:
            chains[i] = c[0]
    for cost in range(1, k + 1):
        for size in range(len(chains) + 1):
            for subset in itertools.combinations(sorted(chains), size):
                chain_cost = sum(len(chains[i]) - 1 for i in subset)
                if chain_cost > cost:
                    continue
                rest = [i for i in range(len(tasks)) if i not in subset]
                if rest:
                    found = _assign(g, [cands[i] for i in rest], cost - chain_cost)
                    if found is None:
                        continue
                    rest_paths, crossing = found
                else:
                    rest_paths, crossing = [], []
                paths: list[Path | None] = [None] * len(tasks)
                for i, p in zip(rest, rest_paths):
                    paths[i] = p
                placements = [
                    Placement((a, b), CHAIN, i) for i in subset for a, b in zip(chains[i], chains[i][1:])
                ]
                placements += [Placement(e, FISSION) for e in crossing]
                return CompatibilityVerdict(True, PathAssignment(tuple(paths))), SupplementPlan(tuple(placements))
    return base, None


def minimal_k(g: Graph, tasks: Sequence[Task], k_max: int, max_len: int | None = None) -> int | None:
    """Smallest supplement budget that makes ``tasks`` compatible, up to ``k_max``."""
    verdict, plan = gk_compatible(g, tasks, k_max, max_len)
    return plan.cost if verdict.compatible else None


# --- witness validation -----------------------------------------------------


def validate_assignment(g: Graph, tasks: Sequence[Task], assignment: PathAssignment) -> bool:
    """Re-check a witness against the definition, independently of the search."""
    if len(assignment.paths) != len(tasks):
        return False
    placed = []
    for t, p in zip(tasks, assignment.paths):
        if p is None:
            continue
        if not is_simple_path(g, p) or (p[0], p[-1]) != (t.origin, t.target):
            return False
        placed.append(p)
    for p, q in itertools.combinations(placed, 2):
        if pairwise_set_distance(g, p, q) < 2:
            return False
    return True


def validate_plan(
    g: Graph, tasks: Sequence[Task], plan: SupplementPlan, k: int, assignment: PathAssignment
) -> bool:
    """Check plan invariants and that the witness holds on the fissioned graph."""
    if plan.cost > k:
        return False
    for p in plan.placements:
        if not g.has_edge(*p.edge):
            return False
    for i in plan.chain_tasks:
        t = tasks[i]
        links = [p.edge for p in plan.placements if p.role == CHAIN and p.task == i]
        walk = [t.origin]
        for a, b in links:
            if a == walk[-1]:
                walk.append(b)
            elif b == walk[-1]:
                walk.append(a)
            else:
                return False
        if walk[-1] != t.target or len(set(walk)) != len(walk):
            return False
        if assignment.paths[i] is not None:
            return False
    for i, p in enumerate(assignment.paths):
        if p is None and i not in plan.chain_tasks:
            return False
    try:
        modified = plan.apply_fissions(g)
    except ValueError:
        return False
    return validate_assignment(modified, tasks, assignment)
