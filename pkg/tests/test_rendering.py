"""Tests for placement and sweep SVGs, bundled literature values and the template loader."""

import pandas as pd
import pytest
from jinja2 import TemplateNotFound

from mesh_placement.bench.charts import (
    PLOT_BOTTOM,
    PLOT_TOP,
    LinearScale,
    render_sweep_chart,
    write_sweep_chart,
)
from mesh_placement.bench.experiment import ExperimentResult, load_experiment_config
from mesh_placement.bench.literature import LITERATURE_COLUMNS, literature_label, load_literature
from mesh_placement.bench.rendering import render_placement_svg, write_placement_svg
from mesh_placement.network.netmodel import Placement, router_links
from mesh_placement.templates import template_loader

from .conftest import make_scenario


@pytest.mark.unit
class TestRenderPlacement:
    def test_chain(self, chained_case):
        s, p = chained_case
        svg = render_placement_svg(s, p)
        assert svg.startswith("<svg")
        assert svg.count("<line ") == len(router_links(s, p)) == 2
        assert svg.count('r="5"') == 3
        assert svg.count('r="2.5"') == 9
        assert 'width="800"' in svg
        assert "psi=9" in svg

    def test_y_axis_points_up(self):
        s = make_scenario([[0.0, 0.0]], 1, 100.0)
        svg = render_placement_svg(s, Placement([[2000.0, 2000.0]]), size_px=400)
        assert '<circle cx="0.00" cy="400.00" r="2.5"' in svg
        assert '<circle cx="400.00" cy="0.00" r="5"' in svg

    def test_uncovered_clients_are_grey(self):
        s = make_scenario([[10.0, 10.0], [1900.0, 1900.0]], 1, 100.0)
        svg = render_placement_svg(s, Placement([[20.0, 20.0]]))
        assert svg.count("#aaaaaa") == 1
        assert svg.count("#7b2d8b") == 1

    def test_non_square_area(self):
        s = make_scenario([[1.0, 1.0]], 1, 10.0, width=1000.0, height=500.0)
        svg = render_placement_svg(s, Placement([[1.0, 1.0]]), size_px=600)
        assert 'width="600" height="300"' in svg

    def test_caption_is_escaped(self, chained_case, tmp_path):
        s, p = chained_case
        path = tmp_path / "placement.svg"
        write_placement_svg(s, p, path, caption="a < b")
        assert "a &lt; b" in path.read_text(encoding="utf-8")


@pytest.mark.unit
class TestLiterature:
    def test_label(self):
        assert literature_label() == "literature values, not reproduced"

    def test_router_sweep(self):
        frame = load_literature("vary_routers")
        assert list(frame.columns) == LITERATURE_COLUMNS
        assert len(frame) == 40
        saturated = frame[(frame["algorithm"] == "MEGA") & (frame["x"] == 40)].iloc[0]
        assert saturated["coverage"] == 100
        assert saturated["connectivity"] == 140

    def test_all_sweeps(self):
        frame = load_literature()
        assert set(frame["sweep"]) == {"vary_clients", "vary_routers", "vary_radius"}
        assert set(frame["algorithm"]) == {"MEGA", "COA", "FA", "GA", "PSO"}


@pytest.mark.unit
class TestTemplateLoader:
    def test_lists_svg_templates(self):
        assert template_loader.list_available_svg_templates() == ["placement", "sweep_chart"]

    def test_missing_template(self):
        with pytest.raises(TemplateNotFound):
            template_loader.load_svg_template("absent")

    def test_missing_data(self):
        with pytest.raises(FileNotFoundError):
            template_loader.load_data("absent")


def sweep_result(kind="vary_routers", std=0.5):
    cfg = load_experiment_config(
        {
            "sweep_kind": kind,
            "sweep_values": [5, 10],
            "trials": 3,
            "algorithms": ["mega", "random_search"],
        }
    )
    frame = pd.DataFrame(
        {
            "sweep_kind": [kind] * 4,
            "algorithm": ["mega", "mega", "random_search", "random_search"],
            "x_value": [5, 10, 5, 10],
            "trials": [3] * 4,
            "psi_mean": [40.0, 70.0, 30.0, 50.0],
            "psi_std": [std] * 4,
            "phi_mean": [50.0, 90.0, 35.0, 60.0],
            "phi_std": [std] * 4,
            "fitness_mean": [0.6, 0.8, 0.3, 0.4],
            "fitness_std": [std / 10] * 4,
        }
    )
    return ExperimentResult(
        config=cfg,
        raw=pd.DataFrame(),
        aggregate=frame,
        metadata={"config_hash": "abc123", "base_seed": 7},
    )


@pytest.mark.unit
class TestSweepChart:
    def test_panels_and_series(self):
        svg = render_sweep_chart(sweep_result())
        assert svg.startswith("<svg")
        assert svg.count('class="panel"') == 3
        assert svg.count("<polyline ") == 2 * 3
        assert svg.count('r="2.5"') == 4 * 3
        assert svg.count('class="std"') == 4 * 3
        assert "stroke-dasharray" not in svg
        assert "<desc>config_hash=abc123,base_seed=7</desc>" in svg
        assert "routers m" in svg
        assert "Connectivity (phi)" in svg

    def test_single_trial_draws_no_error_bars(self):
        svg = render_sweep_chart(sweep_result(std=float("nan")))
        assert 'class="std"' not in svg
        assert svg.count('r="2.5"') == 4 * 3

    def test_literature_overlay(self):
        svg = render_sweep_chart(sweep_result(), load_literature("vary_routers"))
        assert svg.count("<polyline ") == (2 + 5) * 3
        # dashed series in every panel plus their legend entries
        assert svg.count("stroke-dasharray") == 5 * 3 + 5
        assert "COA (literature)" in svg
        assert "literature values, not reproduced" in svg

    def test_empty_literature_is_ignored(self):
        result = sweep_result(kind="single")
        svg = render_sweep_chart(result, load_literature("single"))
        assert svg == render_sweep_chart(result)
        assert "literature" not in svg

    def test_larger_mean_is_drawn_higher(self):
        result = sweep_result()
        scale = LinearScale(0.0, 100.0, PLOT_BOTTOM, PLOT_TOP)
        assert scale(70.0) < scale(40.0)
        assert scale(0.0) == PLOT_BOTTOM
        assert scale(100.0) == PLOT_TOP
        svg = render_sweep_chart(result)
        assert svg == render_sweep_chart(result)

    def test_write(self, tmp_path):
        path = tmp_path / "chart.svg"
        write_sweep_chart(sweep_result(), path)
        assert path.read_text(encoding="utf-8").endswith("</svg>")
