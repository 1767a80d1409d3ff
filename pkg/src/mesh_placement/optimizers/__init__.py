"""Genetic engine (MEGA) and reference optimizers."""

from .baselines import BaselineKind, run_baseline, run_classic_ga, run_random_search
from .mega import GeneticEngine, initialize, run_ga, run_mega
from .operators import crossover, mutate, mutation_rate, select_parents
from .population import (
    FitnessKind,
    GaConfig,
    GenerationRecord,
    Individual,
    MutationKind,
    RunTrace,
    TerminationReason,
)

__all__ = [
    "GaConfig",
    "MutationKind",
    "FitnessKind",
    "Individual",
    "GenerationRecord",
    "RunTrace",
    "TerminationReason",
    "initialize",
    "select_parents",
    "crossover",
    "mutate",
    "mutation_rate",
    "GeneticEngine",
    "run_ga",
    "run_mega",
    "BaselineKind",
    "run_random_search",
    "run_classic_ga",
    "run_baseline",
]
