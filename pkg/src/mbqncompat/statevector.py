"""Dense statevector model of graph states, used to certify the graphical rules.

Qubit ordering: vertices sorted ascending map to tensor axes, most
significant first, so basis index ``0b10`` on a two-vertex graph means the
lower-labelled vertex is in ``|1>``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from mbqncompat.errors import SizeLimitError, UnknownVertexError
from mbqncompat.graph import Graph, neighbors
from mbqncompat.graph_state import PauliBasis, ResourceState, measure

MAX_QUBITS = 12
MAX_ORACLE_VERTICES = 6
TOL = 1e-9

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
SDG = S.conj().T

PAULI = {PauliBasis.Z: Z, PauliBasis.Y: Y}

# Eigenvectors for outcome +1 / -1.
EIGENVECTORS = {
    (PauliBasis.Z, 1): np.array([1, 0], dtype=complex),
    (PauliBasis.Z, -1): np.array([0, 1], dtype=complex),
    (PauliBasis.Y, 1): np.array([1, 1j], dtype=complex) / np.sqrt(2),
    (PauliBasis.Y, -1): np.array([1, -1j], dtype=complex) / np.sqrt(2),
}

# Per-neighbor correction candidates: {I, Z, S, S^dag} and X times each.
CORRECTIONS = tuple([I2, Z, S, SDG] + [X @ m for m in (I2, Z, S, SDG)])


@dataclass(frozen=True, eq=False)
class GraphStateVector:
    num_qubits: int
    amplitudes: np.ndarray
    labels: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.num_qubits > MAX_QUBITS:
            raise SizeLimitError(f"{self.num_qubits} qubits exceeds the limit of {MAX_QUBITS}")
        if self.amplitudes.shape != (2**self.num_qubits,):
            raise ValueError("amplitude vector has the wrong length")

    def qubit_of(self, vertex: int) -> int:
        try:
            return self.labels.index(vertex)
        except ValueError:
            raise UnknownVertexError(vertex) from None

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _bits(n: int) -> np.ndarray:
    idx = np.arange(2**n)
    return (idx[:, None] >> (n - 1 - np.arange(n))) & 1


def build_graph_state(g: Graph) -> GraphStateVector:
    """|G>: uniform superposition with a CZ phase applied per edge."""
    n = len(g)
    if n > MAX_QUBITS:
        raise SizeLimitError(f"{n} qubits exceeds the limit of {MAX_QUBITS}")
    labels = g.vertices
    pos = {v: i for i, v in enumerate(labels)}
    bits = _bits(n)
    parity = np.zeros(2**n, dtype=np.int64)
    for u, v in g.edges():
        parity += bits[:, pos[u]] * bits[:, pos[v]]
    amps = np.where(parity % 2, -1.0, 1.0).astype(complex) / np.sqrt(2**n)
    return GraphStateVector(n, amps, labels)


def apply_single(state: GraphStateVector, op: np.ndarray, q: int) -> GraphStateVector:
    n = state.num_qubits
    psi = state.amplitudes.reshape((2,) * n)
    psi = np.moveaxis(np.tensordot(op, psi, axes=([1], [q])), 0, q)
    return GraphStateVector(n, psi.reshape(-1), state.labels)


def stabilizer_generator(state: GraphStateVector, g: Graph, v: int) -> GraphStateVector:
    """Apply ``X_v`` times ``Z_u`` for every neighbor u of v."""
    out = apply_single(state, X, state.qubit_of(v))
    for u in neighbors(g, v):
        out = apply_single(out, Z, state.qubit_of(u))
    return out


def is_stabilized(state: GraphStateVector, g: Graph, tol: float = TOL) -> bool:
    return all(
        np.allclose(stabilizer_generator(state, g, v).amplitudes, state.amplitudes, atol=tol, rtol=0)
        for v in g.vertices
    )


def measure_pauli(
    state: GraphStateVector, q: int, basis: PauliBasis | str, outcome: int
) -> tuple[GraphStateVector | None, float]:
    """Project qubit ``q`` onto the ``outcome`` eigenspace of ``basis``.

    Returns the renormalized post-measurement state (qubit ``q`` still
    present) and the Born probability. A zero-probability projection returns
    ``(None, 0.0)`` instead of a renormalized vector.
    """
    basis = PauliBasis(basis)
    if outcome not in (1, -1):
        raise ValueError("outcome must be +1 or -1")
    if not 0 <= q < state.num_qubits:
        raise IndexError(f"qubit index {q} out of range")
    proj = (I2 + outcome * PAULI[basis]) / 2
    projected = apply_single(state, proj, q)
    prob = float(np.vdot(projected.amplitudes, projected.amplitudes).real)
    if prob < TOL:
        return None, 0.0
    amps = projected.amplitudes / np.sqrt(prob)
    return GraphStateVector(state.num_qubits, amps, state.labels), prob


def factor_out(state: GraphStateVector, q: int, basis: PauliBasis | str, outcome: int) -> GraphStateVector:
    """Contract qubit ``q`` against the measured eigenvector, dropping it."""
    vec = EIGENVECTORS[PauliBasis(basis), outcome]
    n = state.num_qubits
    psi = state.amplitudes.reshape((2,) * n)
    rest = np.tensordot(vec.conj(), psi, axes=([0], [q])).reshape(-1)
    labels = state.labels[:q] + state.labels[q + 1 :]
    return GraphStateVector(n - 1, rest, labels)


def overlap(a: GraphStateVector, b: GraphStateVector) -> float:
    """Global-phase-insensitive fidelity amplitude |<a|b>|."""
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)))


def find_local_correction(
    state: GraphStateVector, target: GraphStateVector, qubits: list[int], tol: float = TOL
) -> tuple[int, ...] | None:
    """Search per-qubit corrections on ``qubits`` mapping ``state`` to ``target``.

    Returns indices into :data:`CORRECTIONS`, or ``None`` when no product of
    candidates reaches overlap ``1 - tol``. Uniform assignments are tried
    first since the known byproducts apply the same gate to every neighbor.
    """
    k = len(qubits)
    uniform = [(i,) * k for i in range(len(CORRECTIONS))]
    rest = (c for c in itertools.product(range(len(CORRECTIONS)), repeat=k) if len(set(c)) > 1)
    for choice in itertools.chain(uniform, rest):
        out = state
        for q, i in zip(qubits, choice):
            out = apply_single(out, CORRECTIONS[i], q)
        if overlap(out, target) >= 1 - tol:
            return choice
    return None


def oracle_check_measure_rule(g: Graph, v: int, basis: PauliBasis | str) -> bool:
    """Certify the graphical rule for measuring ``v`` against the statevector.

    For both outcomes, the projected state with ``v`` factored out must equal
    the graph state of the rewritten graph up to local corrections on N(v)
    and a global phase.
    """
    basis = PauliBasis(basis)
    if len(g) > MAX_ORACLE_VERTICES:
        raise SizeLimitError(f"oracle check limited to {MAX_ORACLE_VERTICES} vertices")
    if v not in g:
        raise UnknownVertexError(v)
    psi = build_graph_state(g)
    q = psi.qubit_of(v)
    result = measure(ResourceState(g), v, basis).graph
    target = build_graph_state(result)
    nbr_qubits = [target.qubit_of(u) for u in sorted(neighbors(g, v))]
    for outcome in (1, -1):
        post, prob = measure_pauli(psi, q, basis, outcome)
        if post is None:
            return False
        rest = factor_out(post, q, basis, outcome)
        if abs(rest.norm - 1) > TOL:
            return False
        if find_local_correction(rest, target, nbr_qubits) is None:
            return False
    return True
