"""Shared fixtures and oracles for the mesh placement tests."""

from collections import deque
from typing import List, Set, Tuple

import numpy as np
import pytest

from mesh_placement.network.entropy_fitness import FitnessReport
from mesh_placement.network.netmodel import Placement
from mesh_placement.network.scenario import AreaSpec, Scenario, generate_scenario
from mesh_placement.optimizers.population import GaConfig, Individual

# three routers 700 m apart, each with a private triple of clients
FIG3_ROUTERS = [(300.0, 300.0), (1000.0, 300.0), (1700.0, 300.0)]
FIG3_OFFSETS = [(0.0, 50.0), (40.0, -30.0), (-60.0, -20.0)]


def make_scenario(clients, router_count, cr, width=2000.0, height=2000.0, seed=0):
    return Scenario(
        area=AreaSpec(width, height),
        clients=np.array(clients, dtype=np.float64),
        router_count=router_count,
        coverage_radius=cr,
        seed=seed,
    )


@pytest.fixture
def fig3_case() -> Tuple[Scenario, Placement]:
    clients = [
        (rx + dx, ry + dy) for rx, ry in FIG3_ROUTERS for dx, dy in FIG3_OFFSETS
    ]
    return make_scenario(clients, 3, 200.0), Placement(FIG3_ROUTERS)


@pytest.fixture
def chained_case() -> Tuple[Scenario, Placement]:
    """Three routers 350 m apart (< 2*CR) with three clients each."""
    routers = [(300.0, 1000.0), (650.0, 1000.0), (1000.0, 1000.0)]
    clients = [(rx + dx, ry + dy) for rx, ry in routers for dx, dy in FIG3_OFFSETS]
    return make_scenario(clients, 3, 200.0), Placement(routers)


@pytest.fixture
def default_scenario() -> Scenario:
    return generate_scenario(100, 20, 200.0, AreaSpec(2000.0, 2000.0), 42)


@pytest.fixture
def small_scenario() -> Scenario:
    return generate_scenario(30, 6, 200.0, AreaSpec(1000.0, 1000.0), 7)


@pytest.fixture
def small_ga() -> GaConfig:
    return GaConfig(population_size=20, max_iterations=30, target_fitness=2.0, seed=3)


def random_instance(rng: np.random.Generator) -> Tuple[Scenario, Placement]:
    """Random instance with n <= 50 and m <= 10 for oracle comparisons."""
    n = int(rng.integers(1, 51))
    m = int(rng.integers(1, 11))
    cr = float(rng.uniform(30.0, 600.0))
    area = AreaSpec(1000.0, 1000.0)
    s = Scenario(area, area.sample(rng, n), m, cr, int(rng.integers(0, 2**32)))
    return s, Placement(area.sample(rng, m))


def brute_force_assignment(s: Scenario, p: Placement) -> List[int]:
    """O(n*m) double loop: nearest router within CR, lowest index on ties."""
    limit = s.coverage_radius * s.coverage_radius
    assigned = []
    for cx, cy in s.clients.tolist():
        best, best_j = None, -1
        for j, (rx, ry) in enumerate(p.routers.tolist()):
            dx = cx - rx
            dy = cy - ry
            d2 = dx * dx + dy * dy
            if d2 <= limit and (best is None or d2 < best):
                best, best_j = d2, j
        assigned.append(best_j)
    return assigned


def bfs_partition(s: Scenario, p: Placement, assigned: List[int]) -> Set[frozenset]:
    """Components by breadth-first search over the explicit router graph."""
    reach = 2.0 * s.coverage_radius
    limit = reach * reach
    points = p.routers.tolist()
    m = len(points)
    adjacency = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            dx = points[i][0] - points[j][0]
            dy = points[i][1] - points[j][1]
            if dx * dx + dy * dy <= limit:
                adjacency[i].append(j)
                adjacency[j].append(i)

    seen = [False] * m
    partition = set()
    for start in range(m):
        if seen[start]:
            continue
        seen[start] = True
        queue, routers = deque([start]), {start}
        while queue:
            node = queue.popleft()
            for other in adjacency[node]:
                if not seen[other]:
                    seen[other] = True
                    routers.add(other)
                    queue.append(other)
        members = {("r", r) for r in routers}
        members |= {("c", c) for c, r in enumerate(assigned) if r in routers}
        partition.add(frozenset(members))
    return partition


def fake_individual(score: float, m: int = 2) -> Individual:
    """Individual with an arbitrary score for selection tests."""
    report = FitnessReport(
        h_cov=0.0,
        h_con=0.0,
        fitness=score,
        psi=0,
        phi=1,
        component_count=1,
        coverage_probs=(0.0,) * m,
        connectivity_probs=(1.0,),
    )
    return Individual(placement=Placement(np.zeros((m, 2))), report=report, score=score)
