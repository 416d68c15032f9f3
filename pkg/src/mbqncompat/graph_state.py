"""Graphical Pauli-measurement rules on graph states.

A Z measurement deletes the measured vertex; a Y measurement locally
complements it first. The resulting graph does not depend on the outcome,
only the local correction unitaries do, so outcomes are not tracked here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from mbqncompat.errors import AlreadyConsumedError, MissingEdgeError, UnknownVertexError
from mbqncompat.graph import Graph, delete_vertex, local_complement, toggle_edge


class PauliBasis(str, enum.Enum):
    Z = "Z"
    Y = "Y"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ResourceState:
    """Current graph plus the set of qubits already measured out."""

    graph: Graph
    consumed: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if any(v in self.graph for v in self.consumed):
            raise ValueError("consumed vertices must not remain in the graph")

    @property
    def original_vertices(self) -> frozenset[int]:
        return frozenset(self.graph.vertices) | self.consumed


def measure(state: ResourceState, v: int, basis: PauliBasis | str) -> ResourceState:
    """Measure qubit ``v`` in ``basis`` and remove it from the graph."""
    basis = PauliBasis(basis)
    if v in state.consumed:
        raise AlreadyConsumedError(v)
    if v not in state.graph:
        raise UnknownVertexError(v)
    g = state.graph
    if basis is PauliBasis.Y:
        g = local_complement(g, v)
    return ResourceState(delete_vertex(g, v), state.consumed | {v})


def fission_remove_edge(state: ResourceState, u: int, v: int) -> ResourceState:
    """Remove edge (u, v) using one supplemental EPR pair between u and v.

    The pair's two halves are entangled with ``u`` and ``v`` by CZ and then
    Y-measured, so no resource qubit is consumed. Cost accounting is left to
    the caller.
    """
    g = state.graph
    for x in (u, v):
        if x in state.consumed:
            raise AlreadyConsumedError(x)
    if not g.has_edge(u, v):
        if u not in g:
            raise UnknownVertexError(u)
        if v not in g:
            raise UnknownVertexError(v)
        raise MissingEdgeError(f"edge ({u}, {v}) not in graph")
    return ResourceState(toggle_edge(g, u, v), state.consumed)
