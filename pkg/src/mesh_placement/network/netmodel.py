"""Geometric network induced by a router placement.

Clients attach to their nearest router within the coverage radius CR (closed
disk, lowest router index wins ties). Routers link when they are at most 2*CR
apart. Sub-networks are the connected components of the router graph together
with the clients attached to their routers; uncovered clients belong to none.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..config import config
from ..errors import PlacementError
from .scenario import Scenario
from .union_find import DisjointSet

UNCOVERED = -1


@dataclass(frozen=True, eq=False)
class Placement:
    """Ordered router positions; the GA chromosome."""

    routers: np.ndarray

    def __post_init__(self):
        routers = np.array(self.routers, dtype=np.float64).reshape(-1, 2)
        routers.flags.writeable = False
        object.__setattr__(self, "routers", routers)

    def __len__(self) -> int:
        return len(self.routers)

    def __eq__(self, other):
        if not isinstance(other, Placement):
            return NotImplemented
        return np.array_equal(self.routers, other.routers)

    def __hash__(self):
        return hash(self.routers.tobytes())

    def validate_for(self, s: Scenario) -> "Placement":
        """Raise PlacementError unless the placement fits the scenario."""
        if len(self) != s.router_count:
            raise PlacementError(
                f"Placement has {len(self)} routers, scenario expects {s.router_count}"
            )
        outside = np.flatnonzero(~s.area.contains(self.routers))
        if outside.size:
            raise PlacementError(f"Router {int(outside[0])} lies outside the area")
        return self

    def to_list(self) -> List[List[float]]:
        return [[float(x), float(y)] for x, y in self.routers]


@dataclass(frozen=True, eq=False)
class CoverageAssignment:
    """Per-client assigned router (or UNCOVERED) and per-router client counts."""

    assigned: np.ndarray
    counts: np.ndarray

    @property
    def psi(self) -> int:
        """User coverage: number of covered clients."""
        return int(np.count_nonzero(self.assigned != UNCOVERED))

    @property
    def covered(self) -> np.ndarray:
        return self.assigned != UNCOVERED

    def __eq__(self, other):
        if not isinstance(other, CoverageAssignment):
            return NotImplemented
        return np.array_equal(self.assigned, other.assigned) and np.array_equal(
            self.counts, other.counts
        )

    __hash__ = None


@dataclass(frozen=True)
class SubNetwork:
    """One connected component: router indices and attached client indices."""

    routers: Tuple[int, ...]
    clients: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.routers) + len(self.clients)


@dataclass(frozen=True)
class ComponentDecomposition:
    """Partition of routers and covered clients into sub-networks."""

    components: Tuple[SubNetwork, ...]

    @property
    def component_sizes(self) -> List[int]:
        return [component.size for component in self.components]

    @property
    def component_count(self) -> int:
        return len(self.components)


def _squared_distances(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    dx = points[:, 0][:, None] - centers[:, 0][None, :]
    dy = points[:, 1][:, None] - centers[:, 1][None, :]
    return dx * dx + dy * dy


def _coverage_dense(s: Scenario, routers: np.ndarray) -> np.ndarray:
    limit = s.coverage_radius * s.coverage_radius
    d2 = _squared_distances(s.clients, routers)
    d2 = np.where(d2 <= limit, d2, np.inf)
    # argmin returns the first minimum, i.e. the lowest router index on ties
    nearest = np.argmin(d2, axis=1)
    covered = np.isfinite(d2[np.arange(len(d2)), nearest])
    return np.where(covered, nearest, UNCOVERED)


def _coverage_grid(s: Scenario, routers: np.ndarray) -> np.ndarray:
    grid = s.client_grid
    best = np.full(s.n, np.inf)
    assigned = np.full(s.n, UNCOVERED, dtype=np.intp)
    for j, router in enumerate(routers):
        in_range = grid.range_query(router)
        if in_range.size == 0:
            continue
        dx = s.clients[in_range, 0] - router[0]
        dy = s.clients[in_range, 1] - router[1]
        d2 = dx * dx + dy * dy
        # strict < keeps the earlier (lower-index) router on equal distance
        better = d2 < best[in_range]
        hits = in_range[better]
        best[hits] = d2[better]
        assigned[hits] = j
    return assigned


def compute_coverage(
    s: Scenario, p: Placement, strategy: Optional[str] = None
) -> CoverageAssignment:
    """Assign every client to its nearest covering router.

    strategy is "dense", "grid" or None (pick by instance size); both paths
    produce identical assignments.
    """
    routers = p.routers
    if strategy is None:
        strategy = (
            "dense" if s.n * len(routers) <= config.network.dense_pair_limit else "grid"
        )
    if strategy == "dense":
        assigned = _coverage_dense(s, routers)
    elif strategy == "grid":
        assigned = _coverage_grid(s, routers)
    else:
        raise ValueError(f"Unknown coverage strategy: {strategy}")

    assigned = assigned.astype(np.intp)
    counts = np.bincount(assigned[assigned != UNCOVERED], minlength=len(routers))
    assigned.flags.writeable = False
    counts.flags.writeable = False
    return CoverageAssignment(assigned=assigned, counts=counts)


def router_links(s: Scenario, p: Placement) -> List[Tuple[int, int]]:
    """Router pairs (i < j) no more than 2*CR apart."""
    reach = 2.0 * s.coverage_radius
    d2 = _squared_distances(p.routers, p.routers)
    i, j = np.nonzero(np.triu(d2 <= reach * reach, k=1))
    return list(zip(i.tolist(), j.tolist()))


def decompose(
    s: Scenario, p: Placement, cov: CoverageAssignment
) -> ComponentDecomposition:
    """Split routers and their covered clients into connected sub-networks."""
    forest = DisjointSet(len(p))
    for i, j in router_links(s, p):
        forest.merge(i, j)

    router_groups = forest.groups()
    component_of = np.empty(len(p), dtype=np.intp)
    for index, members in enumerate(router_groups):
        component_of[members] = index

    covered = np.flatnonzero(cov.assigned != UNCOVERED)
    client_component = component_of[cov.assigned[covered]]
    components = tuple(
        SubNetwork(
            routers=tuple(members),
            clients=tuple(covered[client_component == index].tolist()),
        )
        for index, members in enumerate(router_groups)
    )
    return ComponentDecomposition(components=components)


def connectivity(dec: ComponentDecomposition) -> int:
    """Network connectivity: size of the largest sub-network."""
    if not dec.components:
        raise ValueError("Decomposition has no components")
    return max(dec.component_sizes)


def edge_list(s: Scenario, p: Placement, cov: CoverageAssignment) -> str:
    """Debug dump: one `r<i> r<j>` line per router link, `c<i> r<j>` per attachment."""
    lines = [f"r{i} r{j}" for i, j in router_links(s, p)]
    lines.extend(
        f"c{client} r{router}"
        for client, router in enumerate(cov.assigned.tolist())
        if router != UNCOVERED
    )
    return "\n".join(lines) + "\n"
