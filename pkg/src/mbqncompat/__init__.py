"""Task compatibility on graph-state resources for measurement-based quantum networks."""

from mbqncompat.compatibility import (
    CompatibilityVerdict,
    PathAssignment,
    SupplementPlan,
    gk_compatible,
    interval_compatible_1d,
    minimal_k,
    worst_case_compatible,
)
from mbqncompat.graph import (
    Graph,
    delete_vertex,
    enumerate_simple_paths,
    local_complement,
    neighbors,
    pairwise_set_distance,
    path_graph,
    ring_graph,
    toggle_edge,
    triangle_graph,
)
from mbqncompat.graph_state import PauliBasis, ResourceState, fission_remove_edge, measure
from mbqncompat.montecarlo import ExperimentConfig, Measure, run_experiment, run_trial, sample_task
from mbqncompat.tasks import (
    MeasurementProgram,
    Task,
    compile_repeater_program,
    execute_program,
    feasible,
    task_satisfied,
)
from mbqncompat.timing import RaceSchedule, partial_compatible, run_race

__all__ = [
    "CompatibilityVerdict",
    "ExperimentConfig",
    "Graph",
    "Measure",
    "MeasurementProgram",
    "PathAssignment",
    "PauliBasis",
    "RaceSchedule",
    "ResourceState",
    "SupplementPlan",
    "Task",
    "compile_repeater_program",
    "delete_vertex",
    "enumerate_simple_paths",
    "execute_program",
    "feasible",
    "fission_remove_edge",
    "gk_compatible",
    "interval_compatible_1d",
    "local_complement",
    "measure",
    "minimal_k",
    "neighbors",
    "pairwise_set_distance",
    "partial_compatible",
    "path_graph",
    "ring_graph",
    "run_experiment",
    "run_race",
    "run_trial",
    "sample_task",
    "task_satisfied",
    "toggle_edge",
    "triangle_graph",
    "worst_case_compatible",
]
