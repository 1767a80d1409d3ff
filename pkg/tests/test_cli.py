"""Tests for the mesh-placement command line."""

import json

import pytest

from mesh_placement.bench.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, main
from mesh_placement.bench.experiment import config_hash
from mesh_placement.bench.export import read_csv
from mesh_placement.optimizers.population import GaConfig

SMALL_SWEEP = [
    "sweep",
    "--kind",
    "vary_radius",
    "--values",
    "100,200",
    "--n",
    "20",
    "--m",
    "4",
    "--width",
    "1000",
    "--height",
    "1000",
    "--trials",
    "2",
    "--iterations",
    "2",
    "--population",
    "10",
    "--workers",
    "1",
]


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scenario.json"
    code = main(
        ["generate", "--n", "30", "--m", "5", "--cr", "150", "--width", "1000",
         "--height", "1000", "--seed", "4", "--out", str(path)]
    )
    assert code == EXIT_OK
    return path


def optimize(scenario, out_dir, *extra):
    return main(
        ["optimize", "--scenario", str(scenario), "--iterations", "5",
         "--population", "10", "--seed", "9", "--out-dir", str(out_dir), *extra]
    )


@pytest.mark.integration
class TestGenerate:
    def test_byte_identical(self, tmp_path, scenario_file):
        again = tmp_path / "again.json"
        main(
            ["generate", "--n", "30", "--m", "5", "--cr", "150", "--width", "1000",
             "--height", "1000", "--seed", "4", "--out", str(again)]
        )
        assert again.read_bytes() == scenario_file.read_bytes()

    def test_missing_argument(self, tmp_path):
        code = main(["generate", "--m", "5", "--cr", "150", "--out", str(tmp_path / "x.json")])
        assert code == EXIT_USAGE

    def test_invalid_dimension(self, tmp_path):
        code = main(
            ["generate", "--n", "0", "--m", "5", "--cr", "150", "--out", str(tmp_path / "x.json")]
        )
        assert code == EXIT_USAGE
        assert not (tmp_path / "x.json").exists()

    def test_no_command(self):
        assert main([]) == EXIT_USAGE


@pytest.mark.integration
class TestOptimize:
    def test_writes_artifacts(self, tmp_path, scenario_file, capsys):
        out = tmp_path / "run"
        assert optimize(scenario_file, out) == EXIT_OK
        assert {p.name for p in out.iterdir()} == {"report.json", "trace.csv", "placement.svg"}

        stdout = capsys.readouterr().out
        assert stdout.startswith("fitness=")
        assert "psi=" in stdout and "phi=" in stdout

        report = json.loads((out / "report.json").read_text(encoding="utf-8"))
        assert len(report["placement"]) == 5
        assert report["run"]["generations"] == 5
        assert report["ga"]["seed"] == 9
        assert "wall_time_s" not in report["run"]
        assert report["report"]["fitness"] == report["score"]

    def test_outputs_carry_provenance(self, tmp_path, scenario_file):
        out = tmp_path / "run"
        optimize(scenario_file, out)
        report = json.loads((out / "report.json").read_text(encoding="utf-8"))
        expected_hash = config_hash(GaConfig(**report["ga"]))
        assert report["provenance"] == {
            "config_hash": expected_hash,
            "seed": 9,
            "scenario_seed": 4,
        }
        line = f"algorithm=mega,config_hash={expected_hash},seed=9,scenario_seed=4"
        first = (out / "trace.csv").read_text(encoding="utf-8").splitlines()[0]
        assert first == f"# {line}"
        assert f"<desc>{line}</desc>" in (out / "placement.svg").read_text(encoding="utf-8")

    def test_seed_changes_provenance(self, tmp_path, scenario_file):
        optimize(scenario_file, tmp_path / "a")
        main(
            ["optimize", "--scenario", str(scenario_file), "--iterations", "5",
             "--population", "10", "--seed", "10", "--out-dir", str(tmp_path / "b")]
        )
        first = [
            (tmp_path / name / "trace.csv").read_text(encoding="utf-8").splitlines()[0]
            for name in ("a", "b")
        ]
        assert first[0] != first[1]
        assert "seed=10," in first[1]

    def test_deterministic(self, tmp_path, scenario_file):
        optimize(scenario_file, tmp_path / "a")
        optimize(scenario_file, tmp_path / "b")
        for name in ("report.json", "trace.csv", "placement.svg"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_zero_iterations(self, tmp_path, scenario_file):
        out = tmp_path / "run"
        code = main(
            ["optimize", "--scenario", str(scenario_file), "--iterations", "0",
             "--out-dir", str(out)]
        )
        assert code == EXIT_OK
        trace = read_csv(out / "trace.csv")
        assert len(trace) == 1
        assert trace["generation"].tolist() == [0]

    @pytest.mark.parametrize("algorithm", ["random_search", "classic_ga"])
    def test_baselines(self, tmp_path, scenario_file, algorithm):
        out = tmp_path / algorithm
        assert optimize(scenario_file, out, "--algorithm", algorithm) == EXIT_OK
        report = json.loads((out / "report.json").read_text(encoding="utf-8"))
        assert report["run"]["algorithm"] == algorithm

    def test_record_timing(self, tmp_path, scenario_file):
        out = tmp_path / "run"
        optimize(scenario_file, out, "--record-timing")
        report = json.loads((out / "report.json").read_text(encoding="utf-8"))
        assert report["run"]["wall_time_s"] >= 0.0

    def test_missing_scenario(self, tmp_path):
        assert optimize(tmp_path / "absent.json", tmp_path / "run") == EXIT_IO

    def test_malformed_scenario(self, tmp_path, scenario_file):
        data = json.loads(scenario_file.read_text(encoding="utf-8"))
        data["clients"][0] = [5000.0, 1.0]
        scenario_file.write_text(json.dumps(data), encoding="utf-8")
        assert optimize(scenario_file, tmp_path / "run") == EXIT_IO

    def test_unknown_algorithm(self, tmp_path, scenario_file):
        assert optimize(scenario_file, tmp_path / "run", "--algorithm", "pso") == EXIT_USAGE

    def test_invalid_ga_parameters(self, tmp_path, scenario_file):
        code = optimize(scenario_file, tmp_path / "run", "--elitism", "10")
        assert code == EXIT_USAGE


@pytest.mark.integration
class TestRender:
    def test_from_report(self, tmp_path, scenario_file):
        optimize(scenario_file, tmp_path / "run")
        svg = tmp_path / "again.svg"
        code = main(
            ["render", "--scenario", str(scenario_file), "--placement",
             str(tmp_path / "run" / "report.json"), "--out", str(svg)]
        )
        assert code == EXIT_OK
        text = svg.read_text(encoding="utf-8")
        assert text.startswith("<svg")
        assert "seed=9," in text
        assert "scenario_seed=4" in text

    def test_bare_list_gets_scenario_seed(self, tmp_path, scenario_file):
        placement = tmp_path / "placement.json"
        routers = [[100.0 * i + 50.0, 50.0] for i in range(5)]
        placement.write_text(json.dumps(routers), encoding="utf-8")
        svg = tmp_path / "bare.svg"
        code = main(
            ["render", "--scenario", str(scenario_file), "--placement", str(placement),
             "--out", str(svg)]
        )
        assert code == EXIT_OK
        assert "<desc>scenario_seed=4</desc>" in svg.read_text(encoding="utf-8")

    @pytest.mark.parametrize(
        "content", ['{"routers": [[1.0, 1.0]]}', '[1.0, 2.0]', '[["a", "b"]]']
    )
    def test_malformed_placement_file(self, tmp_path, scenario_file, content):
        placement = tmp_path / "placement.json"
        placement.write_text(content, encoding="utf-8")
        code = main(
            ["render", "--scenario", str(scenario_file), "--placement", str(placement),
             "--out", str(tmp_path / "x.svg")]
        )
        assert code == EXIT_IO
        assert not (tmp_path / "x.svg").exists()

    def test_wrong_router_count(self, tmp_path, scenario_file):
        placement = tmp_path / "placement.json"
        placement.write_text("[[1.0, 1.0]]", encoding="utf-8")
        code = main(
            ["render", "--scenario", str(scenario_file), "--placement", str(placement),
             "--out", str(tmp_path / "x.svg")]
        )
        assert code == EXIT_IO


@pytest.mark.integration
class TestSweep:
    def test_from_flags(self, tmp_path, capsys):
        out = tmp_path / "sweep"
        assert main([*SMALL_SWEEP, "--out-dir", str(out), "--overlay-literature"]) == EXIT_OK
        assert {p.name for p in out.iterdir()} == {
            "raw.csv",
            "aggregate.csv",
            "summary.json",
            "literature.csv",
            "chart.svg",
        }
        raw = read_csv(out / "raw.csv")
        assert len(raw) == 4
        assert set(raw["x_value"]) == {100.0, 200.0}
        assert "mega" in capsys.readouterr().out

    def test_byte_identical(self, tmp_path):
        main([*SMALL_SWEEP, "--out-dir", str(tmp_path / "a")])
        main([*SMALL_SWEEP, "--out-dir", str(tmp_path / "b")])
        for name in ("raw.csv", "aggregate.csv", "summary.json", "chart.svg"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_from_yaml(self, tmp_path):
        config = tmp_path / "sweep.yaml"
        config.write_text(
            "sweep_kind: vary_clients\n"
            "sweep_values: [10, 20]\n"
            "m: 3\n"
            "trials: 1\n"
            "algorithms: [mega, classic_ga]\n"
            "ga:\n"
            "  population_size: 10\n"
            "  max_iterations: 2\n",
            encoding="utf-8",
        )
        out = tmp_path / "sweep"
        code = main(["sweep", "--config", str(config), "--workers", "1", "--out-dir", str(out)])
        assert code == EXIT_OK
        raw = read_csv(out / "raw.csv")
        assert raw["algorithm"].tolist() == ["mega", "mega", "classic_ga", "classic_ga"]
        assert raw["x_value"].tolist() == [10, 20, 10, 20]

    def test_single_point_defaults_to_n(self, tmp_path):
        out = tmp_path / "sweep"
        code = main(
            ["sweep", "--n", "15", "--m", "3", "--trials", "1", "--iterations", "1",
             "--population", "10", "--workers", "1", "--out-dir", str(out)]
        )
        assert code == EXIT_OK
        assert read_csv(out / "raw.csv")["x_value"].tolist() == [15]

    def test_decreasing_values(self, tmp_path):
        args = [*SMALL_SWEEP, "--out-dir", str(tmp_path / "sweep")]
        args[args.index("100,200")] = "200,100"
        assert main(args) == EXIT_USAGE

    def test_unknown_config_key(self, tmp_path):
        config = tmp_path / "sweep.yaml"
        config.write_text("trails: 3\n", encoding="utf-8")
        assert main(["sweep", "--config", str(config)]) == EXIT_USAGE

    def test_missing_config_file(self, tmp_path):
        assert main(["sweep", "--config", str(tmp_path / "absent.yaml")]) == EXIT_IO

    def test_broken_yaml(self, tmp_path):
        config = tmp_path / "sweep.yaml"
        config.write_text("sweep_values: [1, 2\n", encoding="utf-8")
        assert main(["sweep", "--config", str(config)]) == EXIT_IO
