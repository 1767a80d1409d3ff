"""Problem instances, geometric network model and entropy fitness."""

from .entropy_fitness import (
    FitnessReport,
    connectivity_entropy,
    coverage_entropy,
    evaluate,
)
from .netmodel import (
    UNCOVERED,
    ComponentDecomposition,
    CoverageAssignment,
    Placement,
    SubNetwork,
    compute_coverage,
    connectivity,
    decompose,
    edge_list,
)
from .scenario import (
    AreaSpec,
    Scenario,
    generate_scenario,
    load_scenario,
    save_scenario,
)

__all__ = [
    "AreaSpec",
    "Scenario",
    "generate_scenario",
    "load_scenario",
    "save_scenario",
    "UNCOVERED",
    "Placement",
    "CoverageAssignment",
    "SubNetwork",
    "ComponentDecomposition",
    "compute_coverage",
    "decompose",
    "connectivity",
    "edge_list",
    "FitnessReport",
    "coverage_entropy",
    "connectivity_entropy",
    "evaluate",
]
