"""Uniform grid index for fixed-radius neighbor queries."""

import math
from collections import defaultdict
from typing import Dict, Tuple

import numpy as np

# widening the cell a hair keeps every point within `radius` inside the 3x3 block
# even when x / cell rounds up across a cell boundary
_CELL_SLACK = 1.0 + 1e-9


class SpatialGrid:
    """Buckets points into square cells so a radius query inspects 3x3 cells."""

    def __init__(self, points: np.ndarray, radius: float):
        self.points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        self.radius = float(radius)
        self.cell_size = self.radius * _CELL_SLACK

        buckets: Dict[Tuple[int, int], list] = defaultdict(list)
        for index, point in enumerate(self.points):
            buckets[self._to_cell(point)].append(index)
        self.cells: Dict[Tuple[int, int], np.ndarray] = {
            cell: np.array(indices, dtype=np.intp) for cell, indices in buckets.items()
        }

    def _to_cell(self, point) -> Tuple[int, int]:
        return (
            math.floor(point[0] / self.cell_size),
            math.floor(point[1] / self.cell_size),
        )

    def candidates(self, point) -> np.ndarray:
        """Indices of points in the 3x3 cell block around point (a superset of hits)."""
        cx, cy = self._to_cell(point)
        found = [
            self.cells[cell]
            for cell in (
                (cx + dx, cy + dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)
            )
            if cell in self.cells
        ]
        if not found:
            return np.empty(0, dtype=np.intp)
        return np.concatenate(found)

    def range_query(self, point) -> np.ndarray:
        """Sorted indices of points within the closed radius of point."""
        indices = self.candidates(point)
        dx = self.points[indices, 0] - point[0]
        dy = self.points[indices, 1] - point[1]
        hits = indices[dx * dx + dy * dy <= self.radius * self.radius]
        return np.sort(hits)
