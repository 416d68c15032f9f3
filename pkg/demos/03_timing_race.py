"""
Racing instructions on a shared chain
=====================================

Requests spread hop by hop from their origin. Each node obeys the first
instruction it receives, so simultaneous intersecting requests can both fail.
"""

from __future__ import annotations

from mbqncompat import RaceSchedule, Task, partial_compatible, path_graph, run_race

g = path_graph(7)
t1, t2 = Task(2, 6), Task(7, 4)

out = run_race(g, RaceSchedule.of((t1, 0), (t2, 0)))
print("simultaneous arrivals, satisfied tasks:", sorted(out.satisfied))
for node, c in sorted(out.commitments.items()):
    print(f"  node {node}: {c.basis.value} for task {c.task} at tick {c.time}")

# A well separated pair survives any arrival order and offset.
print("separated pair, dt=14:", partial_compatible(g, Task(1, 3), Task(5, 6), 14))

# A covering pair: the early task wins outright when the other arrives late.
late = run_race(g, RaceSchedule.of((Task(1, 6), 0), (Task(3, 4), 13)))
print("covering pair, outer first by 13 ticks:", sorted(late.satisfied))
