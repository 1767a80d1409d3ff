"""Static SVG chart of a sweep: coverage, connectivity and fitness against the swept value.

One panel per metric. Each algorithm of the sweep is drawn as a solid line of
per-point means with +/- one standard deviation bars; bundled literature
values, when given, are drawn as dashed lines.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from ..templates import template_loader
from .experiment import ExperimentResult, SweepKind
from .literature import literature_label
from .rendering import provenance_text

# (aggregate metric, literature column, panel title)
PANELS = [
    ("psi", "coverage", "Coverage (psi)"),
    ("phi", "connectivity", "Connectivity (phi)"),
    ("fitness", "fitness", "Fitness"),
]

X_LABELS = {
    SweepKind.VARY_CLIENTS: "clients n",
    SweepKind.VARY_ROUTERS: "routers m",
    SweepKind.VARY_RADIUS: "coverage radius CR (m)",
    SweepKind.SINGLE: "sweep value",
}

ALGORITHM_COLORS = {
    "mega": "#1f3a93",
    "random_search": "#d95f02",
    "classic_ga": "#1b9e77",
}
LITERATURE_COLORS = {
    "MEGA": "#7570b3",
    "COA": "#e7298a",
    "FA": "#66a61e",
    "GA": "#e6ab02",
    "PSO": "#a6761d",
}

PANEL_WIDTH = 320
PANEL_HEIGHT = 260
PLOT_LEFT, PLOT_RIGHT, PLOT_TOP, PLOT_BOTTOM = 56, 308, 30, 210
LEGEND_ROW = 18
TICKS = 5


@dataclass(frozen=True)
class LinearScale:
    """Maps the data interval [lo, hi] onto the pixel interval [start, end]."""

    lo: float
    hi: float
    start: float
    end: float

    def __call__(self, value: float) -> float:
        return self.start + (value - self.lo) / (self.hi - self.lo) * (self.end - self.start)

    def ticks(self, count: int = TICKS) -> List[float]:
        return np.linspace(self.lo, self.hi, count).tolist()


def _bounds(values: Iterable[float], include_zero: bool) -> Tuple[float, float]:
    finite = [float(v) for v in values if np.isfinite(v)]
    if include_zero:
        finite.append(0.0)
    if not finite:
        return 0.0, 1.0
    lo, hi = min(finite), max(finite)
    if hi - lo < 1e-12:
        pad = abs(hi) * 0.1 or 1.0
        return lo - pad, hi + pad
    pad = (hi - lo) * 0.05
    return (lo if include_zero and lo == 0.0 else lo - pad), hi + pad


def _px(value: float) -> str:
    return f"{value:.2f}"


def _tick_label(value: float) -> str:
    return f"{value:.3g}"


def _series(
    label: str,
    color: str,
    xs: List[float],
    ys: List[float],
    stds: Optional[List[float]],
    x_scale: LinearScale,
    y_scale: LinearScale,
    dashed: bool,
) -> Dict[str, Any]:
    points = [(x_scale(x), y_scale(y)) for x, y in zip(xs, ys) if np.isfinite(y)]
    bars = []
    for x, y, std in zip(xs, ys, stds or [np.nan] * len(xs)):
        if np.isfinite(y) and np.isfinite(std) and std > 0:
            bars.append(
                {
                    "x": _px(x_scale(x)),
                    "y1": _px(y_scale(y - std)),
                    "y2": _px(y_scale(y + std)),
                }
            )
    return {
        "label": label,
        "color": color,
        "dashed": dashed,
        "points": " ".join(f"{_px(px)},{_px(py)}" for px, py in points),
        "markers": [{"x": _px(px), "y": _px(py)} for px, py in points],
        "bars": bars,
    }


def _panel(
    index: int,
    metric: str,
    literature_column: str,
    title: str,
    aggregate: pd.DataFrame,
    literature: Optional[pd.DataFrame],
    x_scale: LinearScale,
) -> Dict[str, Any]:
    means = aggregate[f"{metric}_mean"].astype(float)
    stds = aggregate[f"{metric}_std"].astype(float).fillna(0.0)
    values = list(means + stds) + list(means - stds)
    if literature is not None:
        values += literature[literature_column].astype(float).tolist()
    y_scale = LinearScale(*_bounds(values, include_zero=True), PLOT_BOTTOM, PLOT_TOP)

    series = []
    for algorithm, rows in aggregate.groupby("algorithm", sort=False):
        series.append(
            _series(
                algorithm,
                ALGORITHM_COLORS.get(algorithm, "#333333"),
                rows["x_value"].astype(float).tolist(),
                rows[f"{metric}_mean"].astype(float).tolist(),
                rows[f"{metric}_std"].astype(float).tolist(),
                x_scale,
                y_scale,
                dashed=False,
            )
        )
    if literature is not None:
        for algorithm, rows in literature.groupby("algorithm", sort=False):
            rows = rows.sort_values("x")
            series.append(
                _series(
                    f"{algorithm} (literature)",
                    LITERATURE_COLORS.get(algorithm, "#999999"),
                    rows["x"].astype(float).tolist(),
                    rows[literature_column].astype(float).tolist(),
                    None,
                    x_scale,
                    y_scale,
                    dashed=True,
                )
            )

    return {
        "offset": index * PANEL_WIDTH,
        "title": title,
        "x_ticks": [
            {"px": _px(x_scale(v)), "label": _tick_label(v)} for v in x_scale.ticks()
        ],
        "y_ticks": [
            {"px": _px(y_scale(v)), "label": _tick_label(v)} for v in y_scale.ticks()
        ],
        "series": series,
    }


def render_sweep_chart(
    result: ExperimentResult, literature: Optional[pd.DataFrame] = None
) -> str:
    """Three-panel SVG of the sweep aggregates, optionally with literature values."""
    aggregate = result.aggregate
    if literature is not None and literature.empty:
        literature = None

    xs = aggregate["x_value"].astype(float).tolist()
    if literature is not None:
        xs += literature["x"].astype(float).tolist()
    x_scale = LinearScale(*_bounds(xs, include_zero=False), PLOT_LEFT, PLOT_RIGHT)

    panels = [
        _panel(index, metric, column, title, aggregate, literature, x_scale)
        for index, (metric, column, title) in enumerate(PANELS)
    ]
    legend = panels[0]["series"]
    meta = result.metadata
    kind = result.config.sweep_kind
    template = template_loader.load_svg_template("sweep_chart")
    return template.render(
        title=f"{kind.value}: mean +/- std over {result.config.trials} trials",
        provenance=provenance_text(
            {"config_hash": meta.get("config_hash"), "base_seed": meta.get("base_seed")}
        ),
        width_px=PANEL_WIDTH * len(panels),
        height_px=PANEL_HEIGHT + LEGEND_ROW * (len(legend) + 1),
        plot={
            "left": PLOT_LEFT,
            "right": PLOT_RIGHT,
            "top": PLOT_TOP,
            "bottom": PLOT_BOTTOM,
            "width": PLOT_RIGHT - PLOT_LEFT,
            "height": PLOT_BOTTOM - PLOT_TOP,
            "center": (PLOT_LEFT + PLOT_RIGHT) // 2,
        },
        x_label=X_LABELS[kind],
        panels=panels,
        legend=[
            {
                "label": entry["label"],
                "color": entry["color"],
                "dashed": entry["dashed"],
                "y": PANEL_HEIGHT + LEGEND_ROW * row,
            }
            for row, entry in enumerate(legend)
        ],
        literature_note=literature_label() if literature is not None else None,
        note_y=PANEL_HEIGHT + LEGEND_ROW * len(legend),
    )


def write_sweep_chart(
    result: ExperimentResult,
    path: Union[str, Path],
    literature: Optional[pd.DataFrame] = None,
) -> None:
    Path(path).write_text(render_sweep_chart(result, literature), encoding="utf-8")
