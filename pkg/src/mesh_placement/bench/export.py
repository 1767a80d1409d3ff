"""Result files: report JSON, trace and sweep CSVs, sweep summary JSON and chart."""

import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
import pandas as pd

from .. import __version__
from ..errors import PlacementError
from ..network.netmodel import Placement
from ..network.scenario import Scenario
from ..optimizers.population import GaConfig, Individual, RunTrace
from .charts import write_sweep_chart
from .experiment import DESIGN_FLAGS, ExperimentResult, config_hash
from .literature import literature_label, load_literature
from .rendering import provenance_text


def _json_default(value: Any):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def _records(frame: pd.DataFrame) -> list:
    # NaN (e.g. std of a single trial) becomes null
    return frame.astype(object).where(frame.notna(), None).to_dict("records")


def write_json(data: Dict[str, Any], path: Union[str, Path]) -> None:
    text = json.dumps(data, indent=2, default=_json_default, allow_nan=False)
    Path(path).write_text(text + "\n", encoding="utf-8")


def write_csv(
    frame: pd.DataFrame, path: Union[str, Path], header: Dict[str, Any]
) -> None:
    """CSV preceded by one `# key=value,...` provenance line."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(f"# {provenance_text(header)}\n")
        frame.to_csv(f, index=False, lineterminator="\n")


def read_csv(path: Union[str, Path]) -> pd.DataFrame:
    """Read a CSV written by write_csv."""
    return pd.read_csv(path, comment="#")


def run_provenance(s: Scenario, cfg: GaConfig) -> Dict[str, Any]:
    """Config hash and seeds identifying one optimization run."""
    return {
        "config_hash": config_hash(cfg),
        "seed": cfg.seed,
        "scenario_seed": s.seed,
    }


def write_trace(
    trace: RunTrace, path: Union[str, Path], provenance: Dict[str, Any]
) -> None:
    """Per-generation CSV (generation, best, mean, psi, phi) with its provenance line."""
    write_csv(trace.to_frame(), path, provenance)


def run_report(
    s: Scenario,
    best: Individual,
    trace: RunTrace,
    cfg: GaConfig,
    scenario_file: str = "",
    include_timing: bool = False,
) -> Dict[str, Any]:
    """Everything needed to reproduce and re-render one optimization run."""
    return {
        "artifact_version": __version__,
        "scenario": {
            "file": scenario_file,
            "n": s.n,
            "m": s.router_count,
            "cr": s.coverage_radius,
            "width": s.area.width,
            "height": s.area.height,
            "seed": s.seed,
        },
        "provenance": run_provenance(s, cfg),
        "ga": cfg.model_dump(mode="json"),
        "run": trace.summary(include_timing),
        "score": best.score,
        "report": best.report.to_dict(),
        "placement": best.placement.to_list(),
        "design_flags": DESIGN_FLAGS,
    }


def load_placement(path: Union[str, Path]) -> Placement:
    """Placement from a report JSON (`placement` key) or a bare `[[x, y], ...]` list."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict):
        if "placement" not in data:
            raise PlacementError(f"{path}: no 'placement' key")
        data = data["placement"]
    try:
        routers = np.array(data, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise PlacementError(f"{path}: router positions are not numbers: {e}") from e
    if routers.ndim != 2 or routers.shape[1:] != (2,):
        raise PlacementError(f"{path}: expected a list of [x, y] pairs")
    return Placement(routers)


def load_run_provenance(path: Union[str, Path]) -> Dict[str, Any]:
    """The `provenance` block of a report JSON; empty for bare placement lists."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict) and isinstance(data.get("provenance"), dict):
        return data["provenance"]
    return {}


def write_experiment(
    result: ExperimentResult,
    out_dir: Union[str, Path],
    overlay_literature: bool = False,
) -> Dict[str, Path]:
    """Write raw.csv, aggregate.csv, summary.json, chart.svg (and literature.csv)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    meta = result.metadata
    header = {
        "config_hash": meta["config_hash"],
        "base_seed": meta["base_seed"],
        "artifact_version": meta["artifact_version"],
    }

    paths = {
        "raw": out_dir / "raw.csv",
        "aggregate": out_dir / "aggregate.csv",
        "summary": out_dir / "summary.json",
        "chart": out_dir / "chart.svg",
    }
    write_csv(result.raw, paths["raw"], header)
    write_csv(result.aggregate, paths["aggregate"], header)

    summary: Dict[str, Any] = {
        "metadata": meta,
        "aggregate": _records(result.aggregate),
    }
    literature = None
    if overlay_literature:
        literature = load_literature(result.config.sweep_kind.value)
        paths["literature"] = out_dir / "literature.csv"
        write_csv(
            literature, paths["literature"], {**header, "label": literature_label()}
        )
        summary["literature_values"] = {
            "label": literature_label(),
            "records": _records(literature),
        }
    write_json(summary, paths["summary"])
    write_sweep_chart(result, paths["chart"], literature)
    return paths
