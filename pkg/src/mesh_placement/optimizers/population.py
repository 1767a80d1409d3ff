"""GA configuration, individuals and run traces."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..network.entropy_fitness import FitnessReport
from ..network.netmodel import Placement
from ..seeding import MAX_SEED

TRACE_COLUMNS = ["generation", "best_fitness", "mean_fitness", "psi", "phi"]


class MutationKind(str, Enum):
    """How a mutated gene gets its new position."""

    RESAMPLE = "resample"
    GAUSSIAN = "gaussian"


class FitnessKind(str, Enum):
    """Objective driving selection."""

    ENTROPY = "entropy"  # H_cov - H_con
    CLASSIC = "classic"  # (psi / n + phi / (n + m)) / 2
    CONSTANT = "constant"


class TerminationReason(str, Enum):
    """Why a run stopped."""

    ITERATIONS_EXHAUSTED = "iterations_exhausted"
    TARGET_REACHED = "target_reached"
    BUDGET_EXHAUSTED = "budget_exhausted"


class GaConfig(BaseModel):
    """Genetic algorithm parameters; defaults follow the published setup."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    population_size: int = Field(default=50, ge=1)
    max_iterations: int = Field(default=1000, ge=0)
    parent_fraction: float = Field(default=0.20, gt=0.0, le=1.0)
    base_mutation_rate: float = Field(default=0.10, ge=0.0, le=1.0)
    min_mutation_rate: float = Field(default=0.01, ge=0.0, le=1.0)
    elitism_count: int = Field(default=1, ge=0)
    target_fitness: float = 1.0
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    mutation_kind: MutationKind = MutationKind.RESAMPLE
    # standard deviation as a fraction of the longer area side
    gaussian_sigma: float = Field(default=0.05, gt=0.0)

    @model_validator(mode="after")
    def _check_invariants(self) -> "GaConfig":
        problems = []
        if self.min_mutation_rate > self.base_mutation_rate:
            problems.append(
                f"min_mutation_rate ({self.min_mutation_rate}) must not exceed "
                f"base_mutation_rate ({self.base_mutation_rate})"
            )
        if self.parent_count < 2:
            problems.append(
                "floor(parent_fraction * population_size) must be >= 2, got "
                f"{self.parent_count}"
            )
        if self.elitism_count >= self.population_size:
            problems.append(
                f"elitism_count ({self.elitism_count}) must be smaller than "
                f"population_size ({self.population_size})"
            )
        if problems:
            raise ValueError("; ".join(problems))
        return self

    @property
    def parent_count(self) -> int:
        """Number of parents kept by truncation selection."""
        return parent_count(self.parent_fraction, self.population_size)

    @property
    def nominal_evaluations(self) -> int:
        """Evaluations of a run that uses its whole iteration budget."""
        offspring = self.population_size - self.elitism_count
        return self.population_size + self.max_iterations * offspring


def parent_count(parent_fraction: float, population: int) -> int:
    # tolerance so that e.g. 0.2 * 50 is 10, not 9
    return math.floor(parent_fraction * population + 1e-9)


@dataclass(frozen=True)
class Individual:
    """A placement with its cached evaluation."""

    placement: Placement
    report: FitnessReport
    score: float  # objective used for selection; equals report.fitness for MEGA


@dataclass(frozen=True)
class GenerationRecord:
    """Population summary after one generation (generation 0 is the initial one)."""

    generation: int
    best_fitness: float
    mean_fitness: float
    psi: int
    phi: int


@dataclass
class RunTrace:
    """Per-generation history and accounting of one optimizer run."""

    algorithm: str
    fitness_kind: FitnessKind
    records: List[GenerationRecord] = field(default_factory=list)
    termination: TerminationReason = TerminationReason.ITERATIONS_EXHAUSTED
    evaluations: int = 0
    wall_time_s: float = 0.0

    @property
    def generations_executed(self) -> int:
        return max(len(self.records) - 1, 0)

    @property
    def best_fitness(self) -> List[float]:
        return [record.best_fitness for record in self.records]

    def to_frame(self) -> pd.DataFrame:
        rows = [
            [r.generation, r.best_fitness, r.mean_fitness, r.psi, r.phi]
            for r in self.records
        ]
        return pd.DataFrame(rows, columns=TRACE_COLUMNS)

    def summary(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {
            "algorithm": self.algorithm,
            "fitness_kind": self.fitness_kind.value,
            "termination": self.termination.value,
            "generations": self.generations_executed,
            "evaluations": self.evaluations,
        }
        if include_timing:
            data["wall_time_s"] = self.wall_time_s
        return data
