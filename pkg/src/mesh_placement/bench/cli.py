"""Command-line front end: generate, optimize, sweep, render."""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import ValidationError

from ..config import config
from ..errors import ExperimentConfigError, MalformedScenarioError, PlacementError
from ..logging_system import log_error
from ..network.scenario import AreaSpec, generate_scenario, load_scenario, save_scenario
from ..optimizers.population import GaConfig
from .experiment import (
    Algorithm,
    SweepKind,
    load_experiment_config,
    run_algorithm,
    run_experiment,
)
from .export import (
    load_placement,
    load_run_provenance,
    run_provenance,
    run_report,
    write_experiment,
    write_json,
    write_trace,
)
from .rendering import write_placement_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3


def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {e}")


def _name_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mesh-placement",
        description="Mesh router placement with a maximum-entropy genetic algorithm.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="Write a random scenario file.")
    generate.add_argument("--n", type=int, required=True, help="Number of clients.")
    generate.add_argument("--m", type=int, required=True, help="Number of routers.")
    generate.add_argument("--cr", type=float, required=True, help="Coverage radius.")
    generate.add_argument("--width", type=float, default=2000.0)
    generate.add_argument("--height", type=float, default=2000.0)
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--out", type=Path, required=True)

    optimize = commands.add_parser("optimize", help="Optimize one scenario.")
    optimize.add_argument("--scenario", type=Path, required=True)
    optimize.add_argument(
        "--algorithm", choices=[a.value for a in Algorithm], default="mega"
    )
    optimize.add_argument("--iterations", type=int, default=1000)
    optimize.add_argument("--population", type=int, default=50)
    optimize.add_argument("--parent-fraction", type=float, default=0.20)
    optimize.add_argument("--elitism", type=int, default=1)
    optimize.add_argument("--target-fitness", type=float, default=1.0)
    optimize.add_argument(
        "--mutation", choices=["resample", "gaussian"], default="resample"
    )
    optimize.add_argument("--seed", type=int, default=0)
    optimize.add_argument("--out-dir", type=Path, default=None)
    optimize.add_argument("--record-timing", action="store_true")

    sweep = commands.add_parser("sweep", help="Run a parameter sweep.")
    sweep.add_argument("--config", type=Path, help="YAML experiment configuration.")
    sweep.add_argument("--kind", choices=[k.value for k in SweepKind])
    sweep.add_argument("--values", type=_float_list)
    sweep.add_argument("--n", type=int)
    sweep.add_argument("--m", type=int)
    sweep.add_argument("--cr", type=float)
    sweep.add_argument("--width", type=float)
    sweep.add_argument("--height", type=float)
    sweep.add_argument("--trials", type=int)
    sweep.add_argument("--iterations", type=int)
    sweep.add_argument("--population", type=int)
    sweep.add_argument("--algorithms", type=_name_list)
    sweep.add_argument("--base-seed", type=int)
    sweep.add_argument("--workers", type=int, default=None)
    sweep.add_argument("--out-dir", type=Path, default=None)
    sweep.add_argument("--overlay-literature", action="store_true")
    sweep.add_argument("--record-timing", action="store_true")

    render = commands.add_parser("render", help="Re-render a saved placement as SVG.")
    render.add_argument("--scenario", type=Path, required=True)
    render.add_argument("--placement", type=Path, required=True)
    render.add_argument("--out", type=Path, required=True)
    return parser


def cmd_generate(args: argparse.Namespace) -> int:
    scenario = generate_scenario(
        args.n, args.m, args.cr, AreaSpec(args.width, args.height), args.seed
    )
    save_scenario(scenario, args.out)
    print(f"Wrote {args.out} ({scenario.n} clients, {scenario.router_count} routers)")
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    ga = GaConfig(
        population_size=args.population,
        max_iterations=args.iterations,
        parent_fraction=args.parent_fraction,
        elitism_count=args.elitism,
        target_fitness=args.target_fitness,
        mutation_kind=args.mutation,
        seed=args.seed,
    )
    algorithm = Algorithm(args.algorithm)
    best, trace = run_algorithm(algorithm, scenario, ga)

    out_dir = args.out_dir or Path(config.bench.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    report = run_report(
        scenario,
        best,
        trace,
        ga,
        str(args.scenario),
        args.record_timing or config.bench.record_timing,
    )
    provenance = {"algorithm": algorithm.value, **run_provenance(scenario, ga)}
    write_json(report, out_dir / "report.json")
    write_trace(trace, out_dir / "trace.csv", provenance)
    caption = (
        f"{algorithm.value}: fitness={best.report.fitness:.4f} "
        f"psi={best.report.psi} phi={best.report.phi}"
    )
    write_placement_svg(
        scenario, best.placement, out_dir / "placement.svg", caption, provenance
    )
    print(
        f"fitness={best.report.fitness:.6f} h_cov={best.report.h_cov:.6f} "
        f"h_con={best.report.h_con:.6f} psi={best.report.psi} phi={best.report.phi}"
    )
    return EXIT_OK


def _sweep_settings(args: argparse.Namespace) -> Dict[str, Any]:
    data: Dict[str, Any] = {}
    if args.config is not None:
        loaded = yaml.safe_load(args.config.read_text(encoding="utf-8")) or {}
        if not isinstance(loaded, dict):
            raise ExperimentConfigError(
                ["<config>: top level must be a mapping"], str(args.config)
            )
        data.update(loaded)

    overrides = {
        "sweep_kind": args.kind,
        "sweep_values": args.values,
        "n": args.n,
        "m": args.m,
        "cr": args.cr,
        "width": args.width,
        "height": args.height,
        "trials": args.trials,
        "algorithms": args.algorithms,
        "base_seed": args.base_seed,
    }
    data.update({key: value for key, value in overrides.items() if value is not None})

    ga = dict(data.get("ga") or {})
    if args.iterations is not None:
        ga["max_iterations"] = args.iterations
    if args.population is not None:
        ga["population_size"] = args.population
    if ga:
        data["ga"] = ga

    if data.get("sweep_kind", SweepKind.SINGLE.value) == SweepKind.SINGLE.value:
        data.setdefault("sweep_values", [float(data.get("n", 100))])
    return data


def cmd_sweep(args: argparse.Namespace) -> int:
    source = str(args.config) if args.config else "command line"
    cfg = load_experiment_config(_sweep_settings(args), source)
    result = run_experiment(
        cfg,
        workers=args.workers,
        record_timing=args.record_timing or config.bench.record_timing,
    )
    out_dir = args.out_dir or Path(config.bench.output_dir)
    paths = write_experiment(result, out_dir, args.overlay_literature)
    for row in result.aggregate.itertuples(index=False):
        print(
            f"{row.algorithm:<14} x={row.x_value:<8} psi={row.psi_mean:8.2f} "
            f"phi={row.phi_mean:8.2f} fitness={row.fitness_mean:.4f}"
        )
    print(f"Wrote {', '.join(str(path) for path in paths.values())}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    placement = load_placement(args.placement).validate_for(scenario)
    provenance = load_run_provenance(args.placement)
    write_placement_svg(scenario, placement, args.out, provenance=provenance)
    print(f"Wrote {args.out}")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "optimize": cmd_optimize,
    "sweep": cmd_sweep,
    "render": cmd_render,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        return COMMANDS[args.command](args)
    except (ExperimentConfigError, ValidationError) as e:
        log_error("cli", str(e))
        return EXIT_USAGE
    except (
        OSError,
        MalformedScenarioError,
        PlacementError,
        json.JSONDecodeError,
        yaml.YAMLError,
    ) as e:
        log_error("cli", str(e))
        return EXIT_IO
    except ValueError as e:
        log_error("cli", str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
