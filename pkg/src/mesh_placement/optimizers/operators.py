"""Selection, crossover and mutation over router-position chromosomes."""

from typing import List, Sequence, Tuple

import numpy as np

from ..errors import LengthMismatchError
from ..network.netmodel import Placement
from ..network.scenario import AreaSpec
from .population import GaConfig, Individual, MutationKind


def random_placement(area: AreaSpec, m: int, rng: np.random.Generator) -> Placement:
    """m routers i.i.d. uniform over the area."""
    return Placement(area.sample(rng, m))


def rank_population(population: Sequence[Individual]) -> List[int]:
    """Population indices by descending score; ties keep the lower index first."""
    return sorted(range(len(population)), key=lambda i: (-population[i].score, i))


def select_parents(population: Sequence[Individual], cfg: GaConfig) -> List[Individual]:
    """Truncation selection: the top floor(parent_fraction * |pop|) individuals."""
    count = min(cfg.parent_count, len(population))
    return [population[i] for i in rank_population(population)[:count]]


def crossover(
    a: Placement, b: Placement, rng: np.random.Generator
) -> Tuple[Placement, Placement]:
    """Single-point crossover with the cut drawn uniformly from 1..m-1."""
    if len(a) != len(b):
        raise LengthMismatchError(
            f"Cannot cross chromosomes of length {len(a)} and {len(b)}"
        )
    m = len(a)
    if m < 2:
        return Placement(a.routers), Placement(b.routers)
    cut = int(rng.integers(1, m))
    return crossover_at(a, b, cut)


def crossover_at(a: Placement, b: Placement, cut: int) -> Tuple[Placement, Placement]:
    """Children a[:cut] + b[cut:] and b[:cut] + a[cut:]."""
    child1 = np.concatenate([a.routers[:cut], b.routers[cut:]])
    child2 = np.concatenate([b.routers[:cut], a.routers[cut:]])
    return Placement(child1), Placement(child2)


def mutation_rate(fitness: float, cfg: GaConfig) -> float:
    """Per-gene mutation probability, falling linearly as fitness approaches 1."""
    rate = cfg.base_mutation_rate * (1.0 - max(fitness, 0.0))
    return min(max(rate, cfg.min_mutation_rate), cfg.base_mutation_rate)


def mutate(
    p: Placement,
    fitness: float,
    cfg: GaConfig,
    area: AreaSpec,
    rng: np.random.Generator,
) -> Placement:
    """Independently replace each gene with probability mutation_rate(fitness)."""
    rate = mutation_rate(fitness, cfg)
    mask = rng.random(len(p)) < rate
    count = int(np.count_nonzero(mask))
    if count == 0:
        return p

    routers = p.routers.copy()
    if cfg.mutation_kind is MutationKind.GAUSSIAN:
        sigma = cfg.gaussian_sigma * max(area.width, area.height)
        moved = routers[mask] + rng.normal(0.0, sigma, size=(count, 2))
        routers[mask] = np.clip(moved, (0.0, 0.0), (area.width, area.height))
    else:
        routers[mask] = area.sample(rng, count)
    return Placement(routers)
