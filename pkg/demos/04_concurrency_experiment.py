"""
How many random tasks can a chain serve at once?
================================================

Tasks arrive uniformly at random until one no longer fits. The supported count
is averaged over trials for three admission rules, then written and plotted.
"""

from __future__ import annotations

import sys
from pathlib import Path

from mbqncompat import ExperimentConfig, run_experiment
from mbqncompat.reporting import plot_stats, write_stats

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
cfg = ExperimentConfig(sizes=(4, 8, 16, 32, 64), trials=trials, seed=0)
stats = run_experiment(cfg)

for r in stats.rows:
    print(f"N={r.n:3d} {r.measure:>10}: {r.mean:.3f} +/- {r.sem:.3f}")

out = Path("concurrency")
write_stats(stats.rows, out.with_suffix(".csv"))
plot_stats(stats.rows, out.with_suffix(".svg"))
print("wrote", out.with_suffix(".csv"), "and", out.with_suffix(".svg"))
