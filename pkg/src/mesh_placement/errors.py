"""Exception types raised by the mesh placement library."""

from typing import List, Optional


class MeshPlacementError(Exception):
    """Base class for all library errors."""


class InvalidDimensionError(MeshPlacementError, ValueError):
    """Raised when a problem dimension (n, m, CR, area) is invalid."""


class PlacementError(MeshPlacementError, ValueError):
    """Raised when a placement does not fit its scenario."""


class LengthMismatchError(MeshPlacementError, ValueError):
    """Raised when two chromosomes of different lengths are recombined."""


class MalformedScenarioError(MeshPlacementError, ValueError):
    """Raised when a scenario file cannot be parsed or violates an invariant."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"Malformed scenario file: field '{field}': {message}")


class ExperimentConfigError(MeshPlacementError, ValueError):
    """Raised when an experiment configuration has one or more violations."""

    def __init__(self, violations: List[str], source: Optional[str] = None):
        self.violations = list(violations)
        header = "Invalid experiment configuration"
        if source:
            header += f" ({source})"
        lines = "\n".join(f"  - {violation}" for violation in self.violations)
        super().__init__(f"{header}:\n{lines}")
