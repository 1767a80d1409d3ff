"""Parameter sweeps: trial planning, execution and aggregation."""

import hashlib
import json
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd
from joblib import Parallel, delayed
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    ValidationInfo,
    field_validator,
)

from .. import __version__
from ..config import config
from ..errors import ExperimentConfigError
from ..logging_system import log_error, log_info, log_run_complete, log_run_start
from ..network.scenario import AreaSpec, Scenario, generate_scenario
from ..optimizers.baselines import BaselineKind, run_baseline
from ..optimizers.mega import run_mega
from ..optimizers.population import GaConfig, Individual, RunTrace
from ..seeding import MAX_SEED, derive_seed

RAW_COLUMNS = [
    "sweep_kind",
    "algorithm",
    "x_value",
    "trial",
    "seed",
    "psi",
    "phi",
    "h_cov",
    "h_con",
    "fitness",
    "generations",
    "evaluations",
    "wall_ms",
]

METRICS = ["psi", "phi", "fitness"]

DESIGN_FLAGS = {
    "coverage_counting": "assigned_clients_only",
    "tie_break": "lowest_router_index",
    "single_router_h_cov": "psi_over_n",
    "two_router_h_cov": "covered_share_weighted",
    "h_con_denominator": "n_plus_m",
    "scenario_per_trial": "resampled",
    "mutation_rate": "linear_decay_clamped",
    "parent_pairing": "uniform_with_replacement",
}


class SweepKind(str, Enum):
    """Which parameter a sweep varies."""

    VARY_CLIENTS = "vary_clients"
    VARY_ROUTERS = "vary_routers"
    VARY_RADIUS = "vary_radius"
    SINGLE = "single"


class Algorithm(str, Enum):
    """Optimizers a sweep can run."""

    MEGA = "mega"
    RANDOM_SEARCH = "random_search"
    CLASSIC_GA = "classic_ga"


class ExperimentConfig(BaseModel):
    """Sweep definition; defaults reproduce the published default point."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    sweep_kind: SweepKind = SweepKind.SINGLE
    sweep_values: List[float] = Field(default_factory=lambda: [100.0])
    n: int = Field(default=100, ge=1)
    m: int = Field(default=20, ge=1)
    cr: float = Field(default=200.0, gt=0.0)
    width: float = Field(default=2000.0, gt=0.0)
    height: float = Field(default=2000.0, gt=0.0)
    trials: int = Field(default=50, ge=1)
    ga: GaConfig = Field(default_factory=GaConfig)
    algorithms: List[Algorithm] = Field(default_factory=lambda: [Algorithm.MEGA])
    base_seed: int = Field(default=0, ge=0, le=MAX_SEED)

    @field_validator("sweep_values")
    @classmethod
    def _check_values(cls, values: List[float], info: ValidationInfo) -> List[float]:
        problems = []
        if not values:
            problems.append("must not be empty")
        if any(b <= a for a, b in zip(values, values[1:])):
            problems.append("must be strictly increasing")
        kind = info.data.get("sweep_kind")
        if kind in (SweepKind.VARY_CLIENTS, SweepKind.VARY_ROUTERS):
            if any(not float(v).is_integer() or v < 1 for v in values):
                problems.append(f"{kind.value} needs positive integer values")
        elif kind is SweepKind.VARY_RADIUS and any(v <= 0 for v in values):
            problems.append("vary_radius needs positive values")
        if problems:
            raise ValueError("; ".join(problems))
        return values

    @field_validator("algorithms")
    @classmethod
    def _check_algorithms(cls, values: List[Algorithm]) -> List[Algorithm]:
        if not values:
            raise ValueError("must name at least one algorithm")
        if len(set(values)) != len(values):
            raise ValueError("must not repeat an algorithm")
        return values

    def point(self, x_value: float) -> Dict[str, Any]:
        """n, m and cr at one sweep value."""
        params = {"n": self.n, "m": self.m, "cr": self.cr}
        match self.sweep_kind:
            case SweepKind.VARY_CLIENTS:
                params["n"] = int(x_value)
            case SweepKind.VARY_ROUTERS:
                params["m"] = int(x_value)
            case SweepKind.VARY_RADIUS:
                params["cr"] = float(x_value)
            case SweepKind.SINGLE:
                pass
        return params

    def x_label(self, x_value: float):
        if self.sweep_kind is SweepKind.VARY_RADIUS:
            return float(x_value)
        return int(x_value) if float(x_value).is_integer() else float(x_value)


def load_experiment_config(
    data: Dict[str, Any], source: Optional[str] = None
) -> ExperimentConfig:
    """Validate a config mapping, reporting every violation at once."""
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        violations = [
            f"{'.'.join(str(part) for part in error['loc']) or '<config>'}: "
            f"{error['msg']}"
            for error in e.errors()
        ]
        raise ExperimentConfigError(violations, source) from e


def config_hash(cfg: BaseModel) -> str:
    """Stable short hash of a full configuration model."""
    canonical = json.dumps(cfg.model_dump(mode="json"), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def run_algorithm(
    algorithm: Algorithm, scenario: Scenario, ga: GaConfig
) -> Tuple[Individual, RunTrace]:
    """Run one optimizer; baselines get MEGA's seed and evaluation budget."""
    match algorithm:
        case Algorithm.MEGA:
            return run_mega(scenario, ga)
        case Algorithm.RANDOM_SEARCH:
            return run_baseline(BaselineKind.RANDOM_SEARCH, scenario, ga)
        case Algorithm.CLASSIC_GA:
            return run_baseline(BaselineKind.CLASSIC_GA, scenario, ga)
    raise ValueError(f"Unknown algorithm: {algorithm}")


@dataclass(frozen=True)
class TrialSpec:
    """Everything one trial needs; runs identically in any process or order."""

    sweep_kind: SweepKind
    algorithm: Algorithm
    x_value: Any
    trial: int
    seed: int
    scenario_seed: int
    n: int
    m: int
    cr: float
    width: float
    height: float
    ga: GaConfig


def plan_trials(cfg: ExperimentConfig) -> List[TrialSpec]:
    """All trials ordered by (algorithm, sweep value, trial index)."""
    specs = []
    for algorithm in cfg.algorithms:
        for value in cfg.sweep_values:
            x_value = cfg.x_label(value)
            params = cfg.point(value)
            for trial in range(cfg.trials):
                specs.append(
                    TrialSpec(
                        sweep_kind=cfg.sweep_kind,
                        algorithm=algorithm,
                        x_value=x_value,
                        trial=trial,
                        seed=derive_seed(cfg.base_seed, algorithm, x_value, trial),
                        # shared by all algorithms for paired comparisons
                        scenario_seed=derive_seed(
                            cfg.base_seed, "scenario", x_value, trial
                        ),
                        width=cfg.width,
                        height=cfg.height,
                        ga=cfg.ga,
                        **params,
                    )
                )
    return specs


def run_trial(spec: TrialSpec, record_timing: bool = False) -> Dict[str, Any]:
    """Generate the trial's scenario, optimize it and return one raw row."""
    started = time.perf_counter()
    scenario = generate_scenario(
        spec.n, spec.m, spec.cr, AreaSpec(spec.width, spec.height), spec.scenario_seed
    )
    ga = spec.ga.model_copy(update={"seed": spec.seed})
    best, trace = run_algorithm(spec.algorithm, scenario, ga)

    report = best.report
    wall_ms = (time.perf_counter() - started) * 1000.0 if record_timing else 0.0
    return {
        "sweep_kind": spec.sweep_kind.value,
        "algorithm": spec.algorithm.value,
        "x_value": spec.x_value,
        "trial": spec.trial,
        "seed": spec.seed,
        "psi": report.psi,
        "phi": report.phi,
        "h_cov": report.h_cov,
        "h_con": report.h_con,
        "fitness": report.fitness,
        "generations": trace.generations_executed,
        "evaluations": trace.evaluations,
        "wall_ms": round(wall_ms, 3),
    }


def order_rows(raw: pd.DataFrame, cfg: ExperimentConfig) -> pd.DataFrame:
    """Canonical row order, independent of the order trials finished in."""
    rank = {algorithm.value: index for index, algorithm in enumerate(cfg.algorithms)}
    ordered = raw.assign(_rank=raw["algorithm"].map(rank)).sort_values(
        ["_rank", "x_value", "trial"], kind="mergesort"
    )
    return ordered.drop(columns="_rank").reset_index(drop=True)


def aggregate(raw: pd.DataFrame) -> pd.DataFrame:
    """Mean and sample standard deviation of psi, phi and fitness per point."""
    grouped = raw.groupby(["sweep_kind", "algorithm", "x_value"], sort=False)
    stats = grouped[METRICS].agg(["mean", "std"])
    stats.columns = [f"{metric}_{stat}" for metric, stat in stats.columns]
    stats.insert(0, "trials", grouped.size())
    return stats.reset_index()


@dataclass
class ExperimentResult:
    """Raw rows, per-point aggregates and reproducibility metadata of a sweep."""

    config: ExperimentConfig
    raw: pd.DataFrame
    aggregate: pd.DataFrame
    metadata: Dict[str, Any] = field(default_factory=dict)


def build_metadata(cfg: ExperimentConfig, record_timing: bool) -> Dict[str, Any]:
    return {
        "artifact_version": __version__,
        "config_hash": config_hash(cfg),
        "base_seed": cfg.base_seed,
        "seed_rule": "derive_seed(base_seed, algorithm, x_value, trial)",
        "scenario_seed_rule": "derive_seed(base_seed, 'scenario', x_value, trial)",
        "design_flags": DESIGN_FLAGS,
        "timing_recorded": record_timing,
        "config": cfg.model_dump(mode="json"),
    }


def run_experiment(
    cfg: ExperimentConfig,
    workers: Optional[int] = None,
    record_timing: bool = False,
) -> ExperimentResult:
    """Run every (algorithm, sweep value, trial) and aggregate the results."""
    workers = workers or config.runtime.workers
    specs = plan_trials(cfg)
    log_run_start(
        "sweep",
        f"Running {len(specs)} trials",
        {"kind": cfg.sweep_kind.value, "workers": workers},
    )

    try:
        if workers <= 1 or len(specs) <= 1:
            rows = [run_trial(spec, record_timing) for spec in specs]
        else:
            # results come back in submission order whatever the finishing order
            rows = Parallel(n_jobs=workers)(
                delayed(run_trial)(spec, record_timing) for spec in specs
            )
    except Exception as e:
        log_error("sweep", f"Sweep failed: {e}")
        raise

    raw = order_rows(pd.DataFrame(rows, columns=RAW_COLUMNS), cfg)
    result = ExperimentResult(
        config=cfg,
        raw=raw,
        aggregate=aggregate(raw),
        metadata=build_metadata(cfg, record_timing),
    )
    for row in result.aggregate.itertuples(index=False):
        log_info(
            "sweep",
            f"{row.algorithm} x={row.x_value}: psi={row.psi_mean:.1f} "
            f"phi={row.phi_mean:.1f} fitness={row.fitness_mean:.3f}",
        )
    log_run_complete("sweep", f"Running {len(specs)} trials")
    return result
