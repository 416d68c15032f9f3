from __future__ import annotations

from functools import reduce

import numpy as np
import pytest
from oracles import all_labelled_graphs, random_graph

from mbqncompat.errors import SizeLimitError
from mbqncompat.graph import Graph, path_graph, triangle_graph
from mbqncompat.graph_state import ResourceState, measure
from mbqncompat.statevector import (
    GraphStateVector,
    build_graph_state,
    factor_out,
    find_local_correction,
    is_stabilized,
    measure_pauli,
    oracle_check_measure_rule,
)

PAULIS = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]),
}


def full_operator(n: int, ops: dict[int, str]) -> np.ndarray:
    """Kronecker product with ``ops[q]`` on qubit q, most significant first."""
    return reduce(np.kron, [PAULIS[ops.get(q, "I")] for q in range(n)])


def test_plus_state():
    psi = build_graph_state(Graph([1]))
    np.testing.assert_allclose(psi.amplitudes, [2**-0.5, 2**-0.5])


def test_two_path_amplitudes():
    psi = build_graph_state(path_graph(2))
    np.testing.assert_allclose(psi.amplitudes, [0.5, 0.5, 0.5, -0.5])


def test_triangle_stabilizers_with_explicit_operators():
    g = triangle_graph()
    psi = build_graph_state(g).amplitudes
    for q, v in enumerate(g.vertices):
        ops = {q: "X"}
        for u in g.vertices:
            if g.has_edge(u, v):
                ops[g.vertices.index(u)] = "Z"
        np.testing.assert_allclose(full_operator(3, ops) @ psi, psi, atol=1e-12)


def test_stabilized_small_graphs():
    for n in range(1, 5):
        for g in all_labelled_graphs(n):
            psi = build_graph_state(g)
            assert abs(psi.norm - 1) < 1e-9
            assert is_stabilized(psi, g)
    rng = np.random.default_rng(3)
    for _ in range(50):
        g = random_graph(rng, int(rng.integers(5, 7)), 0.5)
        assert is_stabilized(build_graph_state(g), g)


def test_wrong_graph_not_stabilized():
    assert not is_stabilized(build_graph_state(path_graph(3)), triangle_graph())


def test_size_limit():
    with pytest.raises(SizeLimitError):
        build_graph_state(path_graph(13))
    with pytest.raises(SizeLimitError):
        GraphStateVector(13, np.zeros(2**13, dtype=complex))


def test_plus_measured_in_z():
    _, p = measure_pauli(build_graph_state(Graph([1])), 0, "Z", 1)
    assert p == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("outcome", [1, -1])
def test_three_path_y_probability(outcome):
    psi = build_graph_state(path_graph(3))
    post, p = measure_pauli(psi, 1, "Y", outcome)
    proj = (np.eye(8) + outcome * full_operator(3, {1: "Y"})) / 2
    expected = np.linalg.norm(proj @ psi.amplitudes) ** 2
    assert p == pytest.approx(expected, abs=1e-12)
    assert p == pytest.approx(0.5, abs=1e-9)
    np.testing.assert_allclose(post.amplitudes, proj @ psi.amplitudes / np.sqrt(expected), atol=1e-12)


def test_zero_probability_is_flagged():
    zero = GraphStateVector(1, np.array([1, 0], dtype=complex), (1,))
    post, p = measure_pauli(zero, 0, "Z", -1)
    assert post is None and p == 0.0


def test_born_probabilities_are_half():
    for n in range(2, 5):
        for g in all_labelled_graphs(n):
            psi = build_graph_state(g)
            for q in range(n):
                for basis in "ZY":
                    for s in (1, -1):
                        assert measure_pauli(psi, q, basis, s)[1] == pytest.approx(0.5, abs=1e-9)


def test_oracle_y_on_three_path():
    g = path_graph(3)
    assert oracle_check_measure_rule(g, 2, "Y")
    assert measure(ResourceState(g), 2, "Y").graph.edges() == [(1, 3)]


def test_oracle_z_on_two_path():
    assert oracle_check_measure_rule(path_graph(2), 2, "Z")


def test_oracle_size_limit():
    with pytest.raises(SizeLimitError):
        oracle_check_measure_rule(path_graph(7), 4, "Y")


def test_oracle_rejects_wrong_rule():
    # Y on the middle of a 3-path must not match the Z-rule result (no edge).
    psi = build_graph_state(path_graph(3))
    post, _ = measure_pauli(psi, 1, "Y", 1)
    rest = factor_out(post, 1, "Y", 1)
    wrong = build_graph_state(Graph([1, 3]))
    assert find_local_correction(rest, wrong, [0, 1]) is None
    right = build_graph_state(Graph([1, 3], [(1, 3)]))
    assert find_local_correction(rest, right, [0, 1]) is not None


def test_oracle_small_sweep():
    for n in range(1, 4):
        for g in all_labelled_graphs(n):
            for v in g.vertices:
                for basis in "ZY":
                    assert oracle_check_measure_rule(g, v, basis), (g, v, basis)
