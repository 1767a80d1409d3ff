"""Maximum-entropy genetic algorithm for router placement.

One generation: rank the population, keep the top parent_fraction as parents,
carry the elites over unchanged, then fill the rest with pairs of crossover
children of randomly paired parents, each mutated at a rate that shrinks as the
parents' fitness approaches 1. The loop stops after max_iterations generations
or once the best score reaches target_fitness.
"""

import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import config
from ..logging_system import (
    log_progress,
    log_run_complete,
    log_run_start,
    log_warning,
)
from ..network.entropy_fitness import FitnessReport, evaluate_many
from ..network.netmodel import Placement
from ..network.scenario import Scenario
from ..seeding import make_rng
from .operators import crossover, mutate, random_placement, rank_population
from .population import (
    FitnessKind,
    GaConfig,
    GenerationRecord,
    Individual,
    RunTrace,
    TerminationReason,
)

Objective = Callable[[Scenario, FitnessReport], float]


def entropy_objective(_: Scenario, report: FitnessReport) -> float:
    return report.fitness


def classic_objective(s: Scenario, report: FitnessReport) -> float:
    """Normalized coverage plus normalized connectivity, halved; spans [0, 1]."""
    return (report.psi / s.n + report.phi / (s.n + s.router_count)) / 2.0


def constant_objective(_: Scenario, __: FitnessReport) -> float:
    return 0.0


OBJECTIVES: Dict[FitnessKind, Objective] = {
    FitnessKind.ENTROPY: entropy_objective,
    FitnessKind.CLASSIC: classic_objective,
    FitnessKind.CONSTANT: constant_objective,
}


def make_individuals(
    s: Scenario, placements: Sequence[Placement], objective: Objective
) -> List[Individual]:
    """Evaluate a batch of placements and score them with the objective."""
    return [
        Individual(placement=p, report=report, score=objective(s, report))
        for p, report in zip(placements, evaluate_many(s, placements))
    ]


def summarize(generation: int, population: List[Individual]) -> GenerationRecord:
    best = population[rank_population(population)[0]]
    return GenerationRecord(
        generation=generation,
        best_fitness=best.score,
        mean_fitness=float(np.mean([ind.score for ind in population])),
        psi=best.report.psi,
        phi=best.report.phi,
    )


class GeneticEngine:
    """Generation loop shared by MEGA and the classic-fitness GA."""

    def __init__(
        self,
        scenario: Scenario,
        cfg: GaConfig,
        fitness_kind: FitnessKind = FitnessKind.ENTROPY,
        algorithm: str = "mega",
    ):
        self.scenario = scenario
        self.cfg = cfg
        self.fitness_kind = fitness_kind
        self.objective = OBJECTIVES[fitness_kind]
        self.algorithm = algorithm
        self.rng = make_rng(cfg.seed)
        self.evaluations = 0

    def evaluate(self, placements: Sequence[Placement]) -> List[Individual]:
        """Score a batch of placements; every placement counts as one evaluation."""
        self.evaluations += len(placements)
        return make_individuals(self.scenario, placements, self.objective)

    def initialize(self) -> List[Individual]:
        """Random initial population, fully evaluated."""
        s = self.scenario
        return self.evaluate(
            [
                random_placement(s.area, s.router_count, self.rng)
                for _ in range(self.cfg.population_size)
            ]
        )

    def next_generation(self, population: List[Individual]) -> List[Individual]:
        """Elites plus mutated crossover offspring of the selected parents."""
        cfg, rng, area = self.cfg, self.rng, self.scenario.area
        ranked = rank_population(population)
        parents = [population[i] for i in ranked[: min(cfg.parent_count, len(ranked))]]
        elites = [population[i] for i in ranked[: cfg.elitism_count]]

        needed = len(population) - len(elites)
        children: List[Placement] = []
        while len(children) < needed:
            i, j = rng.integers(0, len(parents), size=2)
            mother, father = parents[int(i)], parents[int(j)]
            parent_score = (mother.score + father.score) / 2.0
            for child in crossover(mother.placement, father.placement, rng):
                children.append(mutate(child, parent_score, cfg, area, rng))

        return elites + self.evaluate(children[:needed])

    def run(self) -> Tuple[Individual, RunTrace]:
        """Evolve until the iteration budget is spent or the target is reached."""
        cfg = self.cfg
        started = time.perf_counter()
        trace = RunTrace(algorithm=self.algorithm, fitness_kind=self.fitness_kind)

        population = self.initialize()
        best = population[rank_population(population)[0]]
        trace.records.append(summarize(0, population))

        termination = TerminationReason.ITERATIONS_EXHAUSTED
        if best.score >= cfg.target_fitness:
            termination = TerminationReason.TARGET_REACHED
        else:
            interval = max(config.logging.progress_interval, 1)
            for generation in range(1, cfg.max_iterations + 1):
                population = self.next_generation(population)
                leader = population[rank_population(population)[0]]
                if leader.score > best.score:
                    best = leader
                record = summarize(generation, population)
                trace.records.append(record)
                if generation % interval == 0:
                    log_progress(
                        self.algorithm,
                        generation,
                        record.best_fitness,
                        record.mean_fitness,
                    )
                if best.score >= cfg.target_fitness:
                    termination = TerminationReason.TARGET_REACHED
                    break

        trace.termination = termination
        trace.evaluations = self.evaluations
        trace.wall_time_s = time.perf_counter() - started
        return best, trace


def initialize(
    s: Scenario,
    cfg: GaConfig,
    fitness_kind: FitnessKind = FitnessKind.ENTROPY,
) -> List[Individual]:
    """Initial population drawn from the configured seed."""
    return GeneticEngine(s, cfg, fitness_kind).initialize()


def run_ga(
    s: Scenario,
    cfg: GaConfig,
    fitness_kind: FitnessKind = FitnessKind.ENTROPY,
    algorithm: Optional[str] = None,
) -> Tuple[Individual, RunTrace]:
    """Run the generation loop with the chosen objective."""
    algorithm = algorithm or (
        "mega" if fitness_kind is FitnessKind.ENTROPY else f"{fitness_kind.value}_ga"
    )
    details = {
        "n": s.n,
        "m": s.router_count,
        "cr": s.coverage_radius,
        "population": cfg.population_size,
        "iterations": cfg.max_iterations,
        "seed": cfg.seed,
    }
    log_run_start(algorithm, "Optimizing router placement", details)
    if s.router_count == 1:
        log_warning(
            algorithm, "Single router: coverage entropy falls back to psi / n"
        )

    best, trace = GeneticEngine(s, cfg, fitness_kind, algorithm).run()

    log_run_complete(
        algorithm,
        "Optimizing router placement",
        {
            "best": round(best.score, 4),
            "psi": best.report.psi,
            "phi": best.report.phi,
            "generations": trace.generations_executed,
            "termination": trace.termination.value,
        },
    )
    return best, trace


def run_mega(s: Scenario, cfg: GaConfig) -> Tuple[Individual, RunTrace]:
    """MEGA: the generation loop driven by entropy fitness."""
    return run_ga(s, cfg, FitnessKind.ENTROPY, "mega")
