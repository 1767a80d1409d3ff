"""Entropy-based fitness of a placement.

Coverage entropy H_cov is the Shannon entropy of the per-router share of
assigned clients (P_i = n_i / n), normalized by ln(m); one and two routers
use covered-share forms (see coverage_entropy). Connectivity entropy
H_con is the Shannon entropy of the sub-network size shares
(P_j = |G_j| / (n + m)), normalized by ln(G_n), and 0 for a single sub-network.
Fitness is H_cov - H_con; it peaks at 1 for an even, fully covered, connected
network.
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from .netmodel import (
    ComponentDecomposition,
    CoverageAssignment,
    Placement,
    compute_coverage,
    connectivity,
    decompose,
)
from .scenario import Scenario


@dataclass(frozen=True)
class FitnessReport:
    """All fitness terms for one placement."""

    h_cov: float
    h_con: float
    fitness: float
    psi: int
    phi: int
    component_count: int
    coverage_probs: Tuple[float, ...]
    connectivity_probs: Tuple[float, ...]

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["coverage_probs"] = list(self.coverage_probs)
        data["connectivity_probs"] = list(self.connectivity_probs)
        return data


def _entropy(probs: np.ndarray) -> float:
    # 0 * ln(0) counts as 0
    positive = probs[probs > 0]
    return float(-np.sum(positive * np.log(positive)))


def _non_negative(value: float) -> float:
    return 0.0 if value <= 0.0 else value


def coverage_probabilities(cov: CoverageAssignment, n: int) -> np.ndarray:
    return cov.counts.astype(np.float64) / float(n)


def connectivity_probabilities(
    dec: ComponentDecomposition, n: int, m: int
) -> np.ndarray:
    return np.array(dec.component_sizes, dtype=np.float64) / float(n + m)


def coverage_entropy(cov: CoverageAssignment, n: int, m: int) -> float:
    """Normalized coverage entropy in [0, 1].

    With a single router ln(m) is 0, so the covered share Psi/n is used instead.
    With two routers the entropy of the partial distribution peaks above 1
    (at Psi/n = 2/e), so the entropy of the covered clients' split is weighted
    by the covered share: more coverage always scores higher, and 1 means every
    client covered with an even split. From three routers on the plain value
    never exceeds 1.
    """
    if n < 1 or m < 1:
        raise ValueError(f"coverage_entropy needs n >= 1 and m >= 1, got {n}, {m}")
    probs = coverage_probabilities(cov, n)
    if m == 1:
        return float(probs[0])
    if m == 2:
        covered = float(probs.sum())
        if covered == 0.0:
            return 0.0
        value = covered * _entropy(probs / covered) / math.log(2)
    else:
        value = _entropy(probs) / math.log(m)
    # clamp only absorbs rounding
    return min(_non_negative(value), 1.0)


def connectivity_entropy(dec: ComponentDecomposition, n: int, m: int) -> float:
    """Normalized connectivity entropy; exactly 0 for a single sub-network."""
    component_count = dec.component_count
    if component_count < 1:
        raise ValueError("connectivity_entropy needs at least one component")
    if component_count == 1:
        return 0.0
    probs = connectivity_probabilities(dec, n, m)
    return _non_negative(_entropy(probs) / math.log(component_count))


def report_from_parts(
    s: Scenario, cov: CoverageAssignment, dec: ComponentDecomposition
) -> FitnessReport:
    """Assemble a FitnessReport from an already computed coverage and decomposition."""
    n, m = s.n, s.router_count
    h_cov = coverage_entropy(cov, n, m)
    h_con = connectivity_entropy(dec, n, m)
    return FitnessReport(
        h_cov=h_cov,
        h_con=h_con,
        fitness=h_cov - h_con,
        psi=cov.psi,
        phi=connectivity(dec),
        component_count=dec.component_count,
        coverage_probs=tuple(coverage_probabilities(cov, n).tolist()),
        connectivity_probs=tuple(connectivity_probabilities(dec, n, m).tolist()),
    )


def evaluate(s: Scenario, p: Placement) -> FitnessReport:
    """Coverage, decomposition and both entropies for one placement."""
    cov = compute_coverage(s, p)
    dec = decompose(s, p, cov)
    return report_from_parts(s, cov, dec)


def evaluate_many(s: Scenario, placements: Sequence[Placement]) -> list:
    """Evaluate a batch of placements in order."""
    return [evaluate(s, p) for p in placements]
