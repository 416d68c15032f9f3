from __future__ import annotations

import itertools

import numpy as np
import pytest
from helpers import tasks
from oracles import brute_gk, brute_worst_case, random_graph

from mbqncompat.compatibility import (
    CHAIN,
    DISJOINTNESS,
    FISSION,
    NO_PATH,
    SEPARABILITY,
    CompatibilityVerdict,
    gk_compatible,
    interval_compatible_1d,
    minimal_k,
    validate_assignment,
    validate_plan,
    worst_case_compatible,
)
from mbqncompat.errors import UnknownVertexError
from mbqncompat.graph import Graph, path_graph, toggle_edge
from mbqncompat.tasks import Task

COVERING = ((3, 4), (1, 6))
INTERSECTING = ((2, 6), (4, 7))
ADJACENT = ((1, 3), (4, 6))
SEPARATED = ((1, 3), (5, 6))


class TestWorstCase:
    def test_separated(self, path7):
        v = worst_case_compatible(path7, tasks(*SEPARATED))
        assert v.compatible
        assert v.witness.paths == ((1, 2, 3), (5, 6))

    def test_adjacent(self, path7):
        v = worst_case_compatible(path7, tasks(*ADJACENT))
        assert not v.compatible and v.violated == SEPARABILITY

    def test_covering(self, path7):
        assert not worst_case_compatible(path7, tasks(*COVERING)).compatible

    def test_intersecting(self, path7):
        v = worst_case_compatible(path7, tasks(*INTERSECTING))
        assert not v.compatible and v.violated == DISJOINTNESS

    def test_ring_reroutes_covering_task(self, ring7):
        v = worst_case_compatible(ring7, tasks(*COVERING))
        assert v.compatible
        assert v.witness.paths[1] == (1, 7, 6)

    def test_ring_makes_outer_tasks_adjacent(self, path7, ring7):
        pair = tasks((1, 2), (6, 7))
        assert worst_case_compatible(path7, pair).compatible
        assert not worst_case_compatible(ring7, pair).compatible

    def test_ring_keeps_intersecting_incompatible(self, ring7):
        assert not worst_case_compatible(ring7, tasks(*INTERSECTING)).compatible

    def test_singleton_is_feasibility(self):
        g = Graph([1, 2, 3], [(1, 2)])
        assert worst_case_compatible(g, tasks((1, 2))).compatible
        v = worst_case_compatible(g, tasks((1, 3)))
        assert not v.compatible and v.violated == NO_PATH

    def test_unknown_vertex(self, path7):
        with pytest.raises(UnknownVertexError):
            worst_case_compatible(path7, tasks((1, 8)))

    def test_empty(self, path7):
        with pytest.raises(ValueError):
            worst_case_compatible(path7, [])

    def test_needs_joint_assignment(self):
        # Two 4-cycles sharing vertex 5: each task alone has a detour, but
        # pairwise witnesses must agree on one assignment for the third task.
        g = Graph(range(1, 7), [(1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (5, 6), (1, 6)])
        ts = tasks((1, 3), (5, 6))
        assert worst_case_compatible(g, ts).compatible == brute_worst_case(g, ts)

    def test_matches_brute_force_on_random_graphs(self):
        rng = np.random.default_rng(21)
        for _ in range(300):
            n = int(rng.integers(3, 8))
            g = random_graph(rng, n, float(rng.uniform(0.2, 0.6)))
            ts = [Task(*map(int, rng.choice(np.arange(1, n + 1), 2, replace=False))) for _ in range(int(rng.integers(1, 4)))]
            v = worst_case_compatible(g, ts)
            assert v.compatible == brute_worst_case(g, ts), (g, ts)
            if v.compatible:
                assert validate_assignment(g, ts, v.witness)

    def test_monotone_under_removal(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            n = int(rng.integers(4, 9))
            g = random_graph(rng, n, 0.35)
            ts = [Task(*map(int, rng.choice(np.arange(1, n + 1), 2, replace=False))) for _ in range(3)]
            if worst_case_compatible(g, ts).compatible:
                for r in range(1, len(ts)):
                    for sub in itertools.combinations(ts, r):
                        assert worst_case_compatible(g, sub).compatible


class TestInterval:
    def test_gap_two(self):
        v = interval_compatible_1d(7, tasks(*SEPARATED))
        assert v.compatible and v.witness.paths == ((1, 2, 3), (5, 6))

    def test_gap_one(self):
        v = interval_compatible_1d(7, tasks(*ADJACENT))
        assert not v.compatible and v.violated == SEPARABILITY

    def test_singleton(self):
        assert interval_compatible_1d(7, tasks((1, 7))).compatible

    def test_reversed_orientation(self):
        v = interval_compatible_1d(7, tasks((3, 1)))
        assert v.witness.paths == ((3, 2, 1),)

    def test_out_of_range(self):
        with pytest.raises(UnknownVertexError):
            interval_compatible_1d(7, tasks((0, 3)))

    def test_tags_agree_with_search(self):
        g = path_graph(8)
        pairs = [Task(u, v) for u in range(1, 9) for v in range(1, 9) if u != v]
        for a, b in itertools.product(pairs, repeat=2):
            x, y = worst_case_compatible(g, [a, b]), interval_compatible_1d(8, [a, b])
            assert (x.compatible, x.violated) == (y.compatible, y.violated)


class TestSupplemented:
    def test_covering_served_by_chain(self, path7):
        v, plan = gk_compatible(path7, tasks(*COVERING), 1)
        assert v.compatible
        assert [(p.edge, p.role, p.task) for p in plan.placements] == [((3, 4), CHAIN, 0)]
        assert v.witness.paths == (None, (1, 2, 3, 4, 5, 6))

    def test_adjacent_fixed_by_fission(self, path7):
        v, plan = gk_compatible(path7, tasks(*ADJACENT), 1)
        assert v.compatible
        assert [(p.edge, p.role) for p in plan.placements] == [((3, 4), FISSION)]

    def test_intersecting_needs_more_than_one(self, path7):
        v, plan = gk_compatible(path7, tasks(*INTERSECTING), 1)
        assert not v.compatible and plan is None

    def test_intersecting_with_three(self, path7):
        v, plan = gk_compatible(path7, tasks(*INTERSECTING), 3)
        assert v.compatible and plan.cost == 3
        assert plan.chain_tasks == {1}
        assert [p.edge for p in plan.placements] == [(4, 5), (5, 6), (6, 7)]

    def test_zero_budget_reduces_to_worst_case(self, path7):
        for pair in (COVERING, INTERSECTING, ADJACENT, SEPARATED):
            ts = tasks(*pair)
            assert gk_compatible(path7, ts, 0)[0] == worst_case_compatible(path7, ts)

    def test_negative_budget(self, path7):
        with pytest.raises(ValueError):
            gk_compatible(path7, tasks(*SEPARATED), -1)

    @pytest.mark.parametrize("pair, expected", [(COVERING, 1), (SEPARATED, 0), (ADJACENT, 1), (INTERSECTING, 3)])
    def test_minimal_k(self, path7, pair, expected):
        assert minimal_k(path7, tasks(*pair), 5) == expected

    def test_minimal_k_intersecting_brute_force(self, path7):
        ts = tasks(*INTERSECTING)
        brute = next(k for k in range(4) if brute_gk(path7, ts, k))
        assert brute == 3 == minimal_k(path7, ts, 3)

    def test_minimal_k_absent(self, path7):
        assert minimal_k(path7, tasks(*INTERSECTING), 2) is None

    def test_matches_brute_force_plans(self):
        rng = np.random.default_rng(4)
        for _ in range(150):
            n = int(rng.integers(3, 7))
            g = random_graph(rng, n, float(rng.uniform(0.3, 0.7)))
            ts = [Task(*map(int, rng.choice(np.arange(1, n + 1), 2, replace=False))) for _ in range(int(rng.integers(1, 4)))]
            k = int(rng.integers(0, 3))
            v, plan = gk_compatible(g, ts, k)
            assert v.compatible == brute_gk(g, ts, k), (g, ts, k)
            if v.compatible:
                assert validate_plan(g, ts, plan, k, v.witness)

    def test_monotone_in_k(self):
        rng = np.random.default_rng(13)
        g = path_graph(9)
        for _ in range(200):
            ts = [Task(*map(int, rng.choice(np.arange(1, 10), 2, replace=False))) for _ in range(3)]
            results = [gk_compatible(g, ts, k)[0].compatible for k in range(5)]
            assert results == sorted(results)


def test_added_edge_flips_both_directions(path7):
    ring = toggle_edge(path7, 1, 7)
    assert not worst_case_compatible(path7, tasks(*COVERING)).compatible
    assert worst_case_compatible(ring, tasks(*COVERING)).compatible
    assert worst_case_compatible(path7, tasks((1, 2), (6, 7))).compatible
    assert not worst_case_compatible(ring, tasks((1, 2), (6, 7))).compatible


def test_verdict_invariant():
    with pytest.raises(ValueError):
        CompatibilityVerdict(True)
    with pytest.raises(ValueError):
        CompatibilityVerdict(False)
