"""
Compatibility of two tasks on a 7-node path and ring
====================================================

Four placements of two tasks, checked without and with supplemental EPR pairs.
"""

from __future__ import annotations

from mbqncompat import Task, gk_compatible, minimal_k, path_graph, ring_graph, worst_case_compatible

path7, ring7 = path_graph(7), ring_graph(7)
scenarios = {
    "separated": [Task(1, 3), Task(5, 6)],
    "adjacent": [Task(1, 3), Task(4, 6)],
    "covering": [Task(3, 4), Task(1, 6)],
    "intersecting": [Task(2, 6), Task(4, 7)],
}

for name, ts in scenarios.items():
    v = worst_case_compatible(path7, ts)
    line = f"{name:>12}: path compatible={v.compatible}"
    if not v.compatible:
        line += f" (violated: {v.violated})"
    print(line)

# Closing the ring gives the covering task a detour around the other side.
print("covering on ring:", worst_case_compatible(ring7, scenarios["covering"]).witness.paths)

# With a small budget of extra EPR pairs, some incompatible pairs are rescued.
for name in ("adjacent", "covering", "intersecting"):
    ts = scenarios[name]
    k = minimal_k(path7, ts, 5)
    _, plan = gk_compatible(path7, ts, k)
    print(f"{name:>12}: minimal k={k}; {plan.describe()}")
