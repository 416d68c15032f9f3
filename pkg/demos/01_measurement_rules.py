"""
Measurement rules on graph states
=================================

Z deletes a vertex. Y complements its neighbourhood, then deletes it.
Both rules are checked here against a brute-force statevector.
"""

from __future__ import annotations

from mbqncompat import PauliBasis, ResourceState, measure, path_graph, triangle_graph
from mbqncompat.statevector import oracle_check_measure_rule

# A 5-node chain. Measuring the middle node in Y joins its two neighbours.
g = path_graph(5)
after_y = measure(ResourceState(g), 3, PauliBasis.Y)
print("Y on 3:", after_y.graph.edges())

# Z on the same node just cuts the chain in two.
after_z = measure(ResourceState(g), 3, PauliBasis.Z)
print("Z on 3:", after_z.graph.edges())

# Y on a triangle vertex removes the edge between the other two.
tri = measure(ResourceState(triangle_graph()), 1, PauliBasis.Y)
print("Y on triangle vertex 1:", tri.graph.edges())

# The statevector oracle agrees, for both outcomes and up to local corrections.
for basis in "ZY":
    print(basis, "rule certified:", oracle_check_measure_rule(g, 3, basis))
