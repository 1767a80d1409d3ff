"""Reference optimizers used to sanity-check MEGA on the same scenarios."""

import time
from dataclasses import replace
from enum import Enum
from typing import List, Tuple

from ..logging_system import log_run_complete, log_run_start
from ..network.scenario import Scenario
from ..seeding import make_rng
from .mega import entropy_objective, make_individuals, run_ga, summarize
from .operators import random_placement, rank_population
from .population import (
    FitnessKind,
    GaConfig,
    Individual,
    RunTrace,
    TerminationReason,
)


class BaselineKind(str, Enum):
    """Available reference optimizers."""

    RANDOM_SEARCH = "random_search"
    CLASSIC_GA = "classic_ga"


def run_random_search(
    s: Scenario, evaluation_budget: int, seed: int, batch_size: int = 50
) -> Tuple[Individual, RunTrace]:
    """Sample independent uniform placements; keep the best by entropy fitness.

    The trace holds one row per batch of batch_size samples, with the best-so-far
    score and the batch mean.
    """
    if evaluation_budget < 1:
        raise ValueError(f"evaluation_budget must be >= 1, got {evaluation_budget}")
    if batch_size < 1:
        raise ValueError(f"batch_size must be >= 1, got {batch_size}")

    log_run_start(
        BaselineKind.RANDOM_SEARCH.value,
        "Sampling random placements",
        {"budget": evaluation_budget, "seed": seed},
    )
    started = time.perf_counter()
    rng = make_rng(seed)
    trace = RunTrace(
        algorithm=BaselineKind.RANDOM_SEARCH.value,
        fitness_kind=FitnessKind.ENTROPY,
        termination=TerminationReason.BUDGET_EXHAUSTED,
    )

    best = None
    remaining = evaluation_budget
    while remaining > 0:
        size = min(batch_size, remaining)
        batch: List[Individual] = make_individuals(
            s,
            [random_placement(s.area, s.router_count, rng) for _ in range(size)],
            entropy_objective,
        )
        remaining -= size
        leader = batch[rank_population(batch)[0]]
        if best is None or leader.score > best.score:
            best = leader
        record = summarize(len(trace.records), batch)
        trace.records.append(
            replace(
                record,
                best_fitness=best.score,
                psi=best.report.psi,
                phi=best.report.phi,
            )
        )

    trace.evaluations = evaluation_budget
    trace.wall_time_s = time.perf_counter() - started
    log_run_complete(
        BaselineKind.RANDOM_SEARCH.value,
        "Sampling random placements",
        {"best": round(best.score, 4), "psi": best.report.psi, "phi": best.report.phi},
    )
    return best, trace


def run_classic_ga(s: Scenario, cfg: GaConfig) -> Tuple[Individual, RunTrace]:
    """Same GA machinery as MEGA with the classic (psi, phi) objective."""
    return run_ga(s, cfg, FitnessKind.CLASSIC, BaselineKind.CLASSIC_GA.value)


def run_baseline(
    kind: BaselineKind, s: Scenario, cfg: GaConfig
) -> Tuple[Individual, RunTrace]:
    """Dispatch a baseline with MEGA's seed and nominal evaluation budget."""
    match kind:
        case BaselineKind.RANDOM_SEARCH:
            return run_random_search(
                s, cfg.nominal_evaluations, cfg.seed, batch_size=cfg.population_size
            )
        case BaselineKind.CLASSIC_GA:
            return run_classic_ga(s, cfg)
    raise ValueError(f"Unknown baseline: {kind}")
