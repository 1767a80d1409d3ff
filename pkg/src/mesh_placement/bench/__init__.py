"""Benchmark harness: sweeps, result export, SVG placements and charts, and the CLI."""

from .experiment import (
    Algorithm,
    ExperimentConfig,
    ExperimentResult,
    SweepKind,
    aggregate,
    load_experiment_config,
    run_experiment,
)
from .charts import render_sweep_chart
from .export import write_experiment
from .rendering import render_placement_svg

__all__ = [
    "Algorithm",
    "SweepKind",
    "ExperimentConfig",
    "ExperimentResult",
    "aggregate",
    "load_experiment_config",
    "run_experiment",
    "write_experiment",
    "render_placement_svg",
    "render_sweep_chart",
]
