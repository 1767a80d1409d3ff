"""Problem instances: area, client field, router count and coverage radius."""

import json
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, List, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from ..errors import InvalidDimensionError, MalformedScenarioError
from ..seeding import make_rng, validate_seed

SCENARIO_FORMAT_VERSION = 1


def _frozen_points(points: Any) -> np.ndarray:
    array = np.array(points, dtype=np.float64).reshape(-1, 2)
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class AreaSpec:
    """Rectangular deployment area [0, width] x [0, height] in meters."""

    width: float
    height: float

    def __post_init__(self):
        for name in ("width", "height"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise InvalidDimensionError(f"Area {name} must be > 0, got {value}")

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Boolean mask of points inside the closed rectangle."""
        points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        return (
            (points[:, 0] >= 0.0)
            & (points[:, 0] <= self.width)
            & (points[:, 1] >= 0.0)
            & (points[:, 1] <= self.height)
        )

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Draw count points uniformly over the area."""
        return rng.uniform((0.0, 0.0), (self.width, self.height), size=(count, 2))


@dataclass(frozen=True, eq=False)
class Scenario:
    """Immutable problem instance."""

    area: AreaSpec
    clients: np.ndarray
    router_count: int
    coverage_radius: float
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "clients", _frozen_points(self.clients))
        if len(self.clients) < 1:
            raise InvalidDimensionError("A scenario needs at least one client")
        if self.router_count < 1:
            raise InvalidDimensionError(
                f"router_count must be >= 1, got {self.router_count}"
            )
        if not math.isfinite(self.coverage_radius) or self.coverage_radius <= 0:
            raise InvalidDimensionError(
                f"coverage_radius must be > 0, got {self.coverage_radius}"
            )
        outside = np.flatnonzero(~self.area.contains(self.clients))
        if outside.size:
            raise InvalidDimensionError(
                f"Client {int(outside[0])} lies outside the "
                f"{self.area.width} x {self.area.height} area"
            )
        object.__setattr__(self, "seed", validate_seed(self.seed))

    @property
    def n(self) -> int:
        """Number of clients."""
        return len(self.clients)

    @property
    def m(self) -> int:
        """Number of routers to place."""
        return self.router_count

    @cached_property
    def client_grid(self):
        """Spatial index over the clients with cell size CR, built on first use."""
        from .spatial_grid import SpatialGrid  # pylint: disable=import-outside-toplevel

        return SpatialGrid(self.clients, self.coverage_radius)

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return (
            self.area == other.area
            and self.router_count == other.router_count
            and self.coverage_radius == other.coverage_radius
            and self.seed == other.seed
            and np.array_equal(self.clients, other.clients)
        )

    def __hash__(self):
        return hash(
            (
                self.area,
                self.router_count,
                self.coverage_radius,
                self.seed,
                self.clients.tobytes(),
            )
        )


def generate_scenario(
    n: int, m: int, cr: float, area: AreaSpec, seed: int
) -> Scenario:
    """Draw n clients independently and uniformly over the area."""
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    if m < 1:
        raise InvalidDimensionError(f"m must be >= 1, got {m}")
    if not math.isfinite(cr) or cr <= 0:
        raise InvalidDimensionError(f"cr must be > 0, got {cr}")
    rng = make_rng(seed)
    return Scenario(
        area=area,
        clients=area.sample(rng, n),
        router_count=m,
        coverage_radius=float(cr),
        seed=seed,
    )


class ScenarioDocument(BaseModel):
    """On-disk schema of a scenario file."""

    model_config = ConfigDict(extra="forbid", strict=True)

    version: int
    width: float
    height: float
    router_count: int
    coverage_radius: float
    seed: int
    clients: List[List[float]]

    @field_validator("version")
    @classmethod
    def _known_version(cls, value: int) -> int:
        if value != SCENARIO_FORMAT_VERSION:
            raise ValueError(f"unsupported version {value}")
        return value

    @field_validator("clients")
    @classmethod
    def _pairs(cls, value: List[List[float]]) -> List[List[float]]:
        if not value:
            raise ValueError("at least one client is required")
        for index, point in enumerate(value):
            if len(point) != 2:
                raise ValueError(f"client {index} must be an [x, y] pair")
        return value


def scenario_to_dict(s: Scenario) -> Dict[str, Any]:
    """Serializable form of a scenario."""
    return {
        "version": SCENARIO_FORMAT_VERSION,
        "width": float(s.area.width),
        "height": float(s.area.height),
        "router_count": int(s.router_count),
        "coverage_radius": float(s.coverage_radius),
        "seed": int(s.seed),
        "clients": [[float(x), float(y)] for x, y in s.clients],
    }


def scenario_from_dict(data: Any) -> Scenario:
    """Build a scenario from its serialized form, naming the offending field on error."""
    try:
        document = ScenarioDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "<document>"
        raise MalformedScenarioError(field, first["msg"]) from e

    if document.width <= 0 or not math.isfinite(document.width):
        raise MalformedScenarioError("width", "must be a positive number")
    if document.height <= 0 or not math.isfinite(document.height):
        raise MalformedScenarioError("height", "must be a positive number")
    if document.router_count < 1:
        raise MalformedScenarioError("router_count", "must be >= 1")
    if document.coverage_radius <= 0 or not math.isfinite(document.coverage_radius):
        raise MalformedScenarioError("coverage_radius", "must be a positive number")
    try:
        validate_seed(document.seed)
    except ValueError as e:
        raise MalformedScenarioError("seed", str(e)) from e

    area = AreaSpec(document.width, document.height)
    clients = np.array(document.clients, dtype=np.float64)
    if not np.all(np.isfinite(clients)):
        raise MalformedScenarioError("clients", "coordinates must be finite")
    outside = np.flatnonzero(~area.contains(clients))
    if outside.size:
        raise MalformedScenarioError(
            f"clients.{int(outside[0])}", "point lies outside the area"
        )
    return Scenario(
        area=area,
        clients=clients,
        router_count=document.router_count,
        coverage_radius=document.coverage_radius,
        seed=document.seed,
    )


def dumps_scenario(s: Scenario) -> str:
    """Scenario file text; floats use the shortest round-trip representation."""
    data = scenario_to_dict(s)
    clients = data.pop("clients")
    header = json.dumps(data, indent=2)[:-2]
    rows = ",\n".join(f"    {json.dumps(point)}" for point in clients)
    return f'{header},\n  "clients": [\n{rows}\n  ]\n}}\n'


def save_scenario(s: Scenario, path: Union[str, Path]) -> None:
    """Write a scenario file."""
    Path(path).write_text(dumps_scenario(s), encoding="utf-8")


def load_scenario(path: Union[str, Path]) -> Scenario:
    """Read a scenario file written by save_scenario."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedScenarioError("<document>", f"not valid JSON ({e.msg})") from e
    return scenario_from_dict(data)
