"""Immutable undirected simple graphs and the structural queries used throughout.

Vertices are small integers (1..N in every builder). Every rewrite returns a
new :class:`Graph`; instances are hashable so that path enumeration and
compatibility verdicts can be memoized on them.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping
from functools import lru_cache

from mbqncompat.errors import (
    EmptySetError,
    LiteralParseError,
    MissingEdgeError,
    SelfLoopError,
    UnknownVertexError,
)

Edge = tuple[int, int]
Path = tuple[int, ...]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with value semantics."""

    __slots__ = ("_adj", "_vertices", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()) -> None:
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            for x in (u, v):
                if x not in adj:
                    raise UnknownVertexError(x)
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {v: frozenset(n) for v, n in adj.items()}
        self._vertices: tuple[int, ...] = tuple(sorted(adj))
        self._hash: int | None = None

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset[int]]) -> Graph:
        g = cls.__new__(cls)
        g._adj = dict(adj)
        g._vertices = tuple(sorted(adj))
        g._hash = None
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    def edges(self) -> list[Edge]:
        """Sorted list of edges, each as ``(smaller, larger)``."""
        return sorted((u, v) for u in self._vertices for v in self._adj[u] if u < v)

    @property
    def num_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(neighbors(self, v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._vertices)}, edges={self.edges()})"

    def relabel(self, mapping: Mapping[int, int]) -> Graph:
        """Return an isomorphic copy with vertex ``v`` renamed to ``mapping[v]``."""
        return Graph((mapping[v] for v in self._vertices), ((mapping[u], mapping[v]) for u, v in self.edges()))

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by their smallest vertex."""
        seen: set[int] = set()
        out = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = set(bfs_distances(self, s))
            seen |= comp
            out.append(frozenset(comp))
        return out


def _check(g: Graph, *vs: int) -> None:
    for v in vs:
        if v not in g._adj:
            raise UnknownVertexError(v)


def neighbors(g: Graph, v: int) -> frozenset[int]:
    """Neighborhood N(v)."""
    _check(g, v)
    return g._adj[v]


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v`` and its incident edges."""
    _check(g, v)
    adj = {u: (n - {v}) if u in g._adj[v] else n for u, n in g._adj.items() if u != v}
    return Graph._from_adj(adj)


def local_complement(g: Graph, v: int) -> Graph:
    """Toggle every edge between pairs of neighbors of ``v``."""
    _check(g, v)
    nv = g._adj[v]
    if len(nv) < 2:
        return g
    adj = dict(g._adj)
    for u in nv:
        # u's other neighbors inside N(v) flip; u itself is excluded.
        adj[u] = g._adj[u] ^ (nv - {u})
    return Graph._from_adj(adj)


def toggle_edge(g: Graph, u: int, v: int) -> Graph:
    """Add edge (u, v) if absent, remove it if present."""
    _check(g, u, v)
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    adj = dict(g._adj)
    adj[u] = g._adj[u] ^ {v}
    adj[v] = g._adj[v] ^ {u}
    return Graph._from_adj(adj)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        _check(g, u, v)
        raise MissingEdgeError(f"edge ({u}, {v}) not in graph")
    return toggle_edge(g, u, v)


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Hop distance from ``source`` to every vertex reachable from it."""
    _check(g, source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g._adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Shortest-path distance; ``math.inf`` when disconnected."""
    _check(g, v)
    return bfs_distances(g, u).get(v, math.inf)


def pairwise_set_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> float:
    """Minimum distance between any vertex of ``a`` and any vertex of ``b``.

    Computed with a multi-source BFS from ``a``. Returns ``math.inf`` when no
    vertex of ``b`` is reachable.
    """
    a, b = set(a), set(b)
    if not a or not b:
        raise EmptySetError("both vertex sets must be nonempty")
    _check(g, *a, *b)
    if a & b:
        return 0
    dist = {x: 0 for x in a}
    queue = deque(a)
    while queue:
        x = queue.popleft()
        for y in g._adj[x]:
            if y not in dist:
                if y in b:
                    return dist[x] + 1
                dist[y] = dist[x] + 1
                queue.append(y)
    return math.inf


def enumerate_simple_paths(g: Graph, u: int, v: int, max_len: int | None = None) -> list[Path]:
    """All simple u-v paths with at most ``max_len`` vertices.

    Ordered shortest first, then lexicographically. ``max_len`` defaults to
    the number of vertices.
    """
    _check(g, u, v)
    if u == v:
        raise SelfLoopError("path endpoints must differ")
    if max_len is None:
        max_len = len(g)
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    return list(_simple_paths(g, u, v, max_len))


@lru_cache(maxsize=65536)
def _simple_paths(g: Graph, u: int, v: int, max_len: int) -> tuple[Path, ...]:
    adj = g._adj
    # Vertices that cannot reach v are dead ends; restricting to u's
    # component is enough to keep trees linear-time.
    dist_to_v = bfs_distances(g, v)
    if u not in dist_to_v or dist_to_v[u] + 1 > max_len:
        return ()
    found: list[Path] = []
    stack = [u]
    on_path = {u}

    def extend(x: int) -> None:
        for y in adj[x]:
            if y in on_path:
                continue
            if y == v:
                found.append((*stack, v))
                continue
            if len(stack) + 1 + dist_to_v[y] > max_len:
                continue
            stack.append(y)
            on_path.add(y)
            extend(y)
            stack.pop()
            on_path.discard(y)

    extend(u)
    found.sort(key=lambda p: (len(p), p))
    return tuple(found)


def is_simple_path(g: Graph, path: Iterable[int]) -> bool:
    path = tuple(path)
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def is_induced_path(g: Graph, path: Path) -> bool:
    """True when ``path`` is simple and has no chords."""
    if not is_simple_path(g, path):
        return False
    pos = {x: i for i, x in enumerate(path)}
    for i, x in enumerate(path):
        for y in g._adj[x]:
            j = pos.get(y)
            if j is not None and abs(i - j) > 1:
                return False
    return True


# --- builders ---------------------------------------------------------------


def path_graph(n: int) -> Graph:
    """1D cluster 1-2-...-n."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(range(1, n + 1), ((i, i + 1) for i in range(1, n)))


def ring_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("ring needs at least three vertices")
    return toggle_edge(path_graph(n), 1, n)


def triangle_graph() -> Graph:
    return Graph((1, 2, 3), ((1, 2), (1, 3), (2, 3)))


# --- text literal -----------------------------------------------------------


def parse_graph_literal(text: str) -> Graph:
    """Parse the ``n=<N>`` / ``u-v`` per line format.

    Blank lines and ``#`` comments are ignored. Vertices are 1..N.
    """
    n: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        if n is None:
            key, sep, value = stripped.partition("=")
            if key.strip() != "n" or not sep:
                raise LiteralParseError("expected 'n=<N>' header", lineno, col)
            try:
                n = int(value)
            except ValueError:
                raise LiteralParseError(f"invalid vertex count {value.strip()!r}", lineno, col + stripped.index("=") + 1) from None
            if n < 1:
                raise LiteralParseError("vertex count must be positive", lineno, col)
            continue
        left, sep, right = stripped.partition("-")
        if not sep:
            raise LiteralParseError(f"expected 'u-v' edge, got {stripped!r}", lineno, col)
        try:
            u, v = int(left), int(right)
        except ValueError:
            raise LiteralParseError(f"invalid edge {stripped!r}", lineno, col) from None
        for x, offset in ((u, 0), (v, stripped.index("-") + 1)):
            if not 1 <= x <= n:
                raise LiteralParseError(f"vertex {x} outside 1..{n}", lineno, col + offset)
        if u == v:
            raise LiteralParseError(f"self-loop at vertex {u}", lineno, col)
        e = _edge(u, v)
        if e in seen:
            raise LiteralParseError(f"duplicate edge {u}-{v}", lineno, col)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise LiteralParseError("missing 'n=<N>' header")
    return Graph(range(1, n + 1), edges)


def format_graph_literal(g: Graph) -> str:
    if g.vertices != tuple(range(1, len(g) + 1)):
        raise ValueError("literal format requires vertices 1..N")
    lines = [f"n={len(g)}"] + [f"{u}-{v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
