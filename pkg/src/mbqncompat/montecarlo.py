"""Stochastic-arrival concurrency experiment.

Tasks are drawn uniformly from ordered node pairs and appended one at a
time to the active set. The trial stops at the first arrival that makes the
set incompatible under the chosen measure, and records how many tasks were
admitted before it.

Every trial gets its own random stream derived from ``(seed, n, trial)``
(plus the measure, when streams are not shared), so results do not depend
on worker count or scheduling, and measures can be compared trial by trial
on identical arrival sequences.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from mbqncompat.compatibility import gk_compatible, worst_case_compatible
from mbqncompat.graph import Graph
from mbqncompat.tasks import Task
from mbqncompat.topology import sized_topology

DEFAULT_SIZES = (4, 8, 12, 16, 24, 32, 48, 64)
_KIND_CODES = {"baseline": 0, "worst_case": 1, "gk": 2}


@dataclass(frozen=True)
class Measure:
    """Admission rule: ``baseline``, ``worst_case``, or ``gk`` with budget ``k``."""

    kind: str
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KIND_CODES:
            raise ValueError(f"unknown measure {self.kind!r}")
        if self.k < 0 or (self.kind != "gk" and self.k):
            raise ValueError(f"invalid budget {self.k} for measure {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> Measure:
        text = text.strip()
        for prefix in ("gk:", "gk(", "gk="):
            if text.startswith(prefix):
                return cls("gk", int(text[len(prefix) :].rstrip(")")))
        return cls(text)

    def __str__(self) -> str:
        return f"gk:{self.k}" if self.kind == "gk" else self.kind

    def admits(self, g: Graph, tasks: Sequence[Task]) -> bool:
        if self.kind == "baseline":
            return len(tasks) == 1
        if self.kind == "worst_case":
            return worst_case_compatible(g, tasks).compatible
        return gk_compatible(g, tasks, self.k)[0].compatible


BASELINE = Measure("baseline")
WORST_CASE = Measure("worst_case")


@dataclass(frozen=True)
class ExperimentConfig:
    sizes: tuple[int, ...] = DEFAULT_SIZES
    trials: int = 10_000
    measures: tuple[Measure, ...] = (BASELINE, WORST_CASE, Measure("gk", 1))
    seed: int = 0
    topology: str = "path"
    shared_streams: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if any(n < 2 for n in self.sizes):
            raise ValueError("every network size must be at least 2")
        if not self.measures:
            raise ValueError("at least one measure is required")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class TrialOutcome:
    supported: int
    rejected_task: Task


@dataclass(frozen=True)
class StatsRow:
    n: int
    measure: str
    mean: float
    sem: float
    trials: int
    seed: int


@dataclass
class ExperimentStats:
    rows: list[StatsRow]
    samples: dict[tuple[int, str], np.ndarray] = field(default_factory=dict, repr=False)

    def row(self, n: int, measure: Measure | str) -> StatsRow:
        name = str(measure)
        for r in self.rows:
            if r.n == n and r.measure == name:
                return r
        raise KeyError((n, name))


def sample_task(n: int, rng: np.random.Generator) -> Task:
    """Uniform draw over the n(n-1) ordered pairs of distinct vertices 1..n."""
    if n < 2:
        raise ValueError("need at least two nodes to draw a task")
    idx = int(rng.integers(n * (n - 1)))
    u, r = divmod(idx, n - 1)
    v = r if r < u else r + 1
    return Task(u + 1, v + 1)


def trial_rng(seed: int, n: int, trial: int, measure: Measure | None = None) -> np.random.Generator:
    """Per-trial stream; pass ``measure`` only for independent streams."""
    key: tuple[int, ...] = (n, trial)
    if measure is not None:
        key = (n, _KIND_CODES[measure.kind], measure.k, trial)
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def run_trial(n: int, measure: Measure, rng: np.random.Generator, graph: Graph | None = None) -> TrialOutcome:
    g = graph if graph is not None else sized_topology("path", n)
    active: list[Task] = []
    while True:
        t = sample_task(n, rng)
        candidate = (*active, t)
        if not measure.admits(g, candidate):
            return TrialOutcome(len(active), t)
        active.append(t)


def _run_chunk(args: tuple[int, Measure, int, str, bool, int, int]) -> list[int]:
    n, measure, seed, topology, shared, start, stop = args
    g = sized_topology(topology, n)
    out = []
    for trial in range(start, stop):
        rng = trial_rng(seed, n, trial, None if shared else measure)
        out.append(run_trial(n, measure, rng, g).supported)
    return out


def run_trials(cfg: ExperimentConfig, n: int, measure: Measure, pool: ProcessPoolExecutor | None = None) -> np.ndarray:
    """Supported-task counts for every trial at size ``n``, in trial order."""
    if measure.kind == "baseline":
        # Capacity-one admission needs no sampling beyond the second draw.
        return np.ones(cfg.trials, dtype=np.int64)
    if pool is None:
        counts = _run_chunk((n, measure, cfg.seed, cfg.topology, cfg.shared_streams, 0, cfg.trials))
    else:
        step = math.ceil(cfg.trials / (4 * cfg.workers))
        chunks = [
            (n, measure, cfg.seed, cfg.topology, cfg.shared_streams, s, min(s + step, cfg.trials))
            for s in range(0, cfg.trials, step)
        ]
        counts = [c for part in pool.map(_run_chunk, chunks) for c in part]
    return np.asarray(counts, dtype=np.int64)


def summarize(samples: np.ndarray) -> tuple[float, float]:
    """Mean and standard error of the mean (sample std over sqrt(trials))."""
    mean = float(samples.mean())
    if len(samples) < 2:
        return mean, 0.0
    return mean, float(samples.std(ddof=1) / math.sqrt(len(samples)))


def run_experiment(cfg: ExperimentConfig) -> ExperimentStats:
    rows = []
    samples = {}
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        for n in cfg.sizes:
            for measure in cfg.measures:
                counts = run_trials(cfg, n, measure, pool)
                mean, sem = summarize(counts)
                rows.append(StatsRow(n, str(measure), mean, sem, cfg.trials, cfg.seed))
                samples[n, str(measure)] = counts
    finally:
        if pool is not None:
            pool.shutdown()
    return ExperimentStats(rows, samples)
