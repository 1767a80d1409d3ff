"""SVG drawing of a placement: clients, routers, coverage disks and router links."""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..config import config
from ..network.netmodel import UNCOVERED, Placement, compute_coverage, router_links
from ..network.scenario import Scenario
from ..templates import template_loader


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def provenance_text(provenance: Dict[str, Any]) -> str:
    """`key=value,...` line embedded in CSV headers and SVG descriptions."""
    return ",".join(f"{key}={value}" for key, value in provenance.items())


def render_placement_svg(
    s: Scenario,
    p: Placement,
    caption: Optional[str] = None,
    size_px: Optional[int] = None,
    provenance: Optional[Dict[str, Any]] = None,
) -> str:
    """Render the placement as a standalone SVG document (y axis pointing up).

    provenance (config hash, seeds) goes into the document's <desc>; the
    scenario seed is always included.
    """
    size_px = size_px or config.bench.svg_size
    scale = size_px / max(s.area.width, s.area.height)
    width_px = round(s.area.width * scale)
    height_px = round(s.area.height * scale)

    def to_px(point):
        return _fmt(point[0] * scale), _fmt(height_px - point[1] * scale)

    cov = compute_coverage(s, p)
    routers = [dict(zip(("x", "y"), to_px(r))) for r in p.routers]
    clients = [
        {"x": x, "y": y, "covered": assigned != UNCOVERED}
        for (x, y), assigned in zip(
            (to_px(c) for c in s.clients), cov.assigned.tolist()
        )
    ]
    links = []
    for i, j in router_links(s, p):
        (x1, y1), (x2, y2) = to_px(p.routers[i]), to_px(p.routers[j])
        links.append({"x1": x1, "y1": y1, "x2": x2, "y2": y2})

    details = dict(provenance or {})
    details.setdefault("scenario_seed", s.seed)

    template = template_loader.load_svg_template("placement")
    return template.render(
        title=f"{s.router_count} routers, {s.n} clients, CR={s.coverage_radius:g} m",
        provenance=provenance_text(details),
        width_px=width_px,
        height_px=height_px,
        radius_px=_fmt(s.coverage_radius * scale),
        disks=routers,
        routers=routers,
        clients=clients,
        links=links,
        caption=caption or f"psi={cov.psi}",
    )


def write_placement_svg(
    s: Scenario,
    p: Placement,
    path: Union[str, Path],
    caption: Optional[str] = None,
    provenance: Optional[Dict[str, Any]] = None,
) -> None:
    svg = render_placement_svg(s, p, caption, provenance=provenance)
    Path(path).write_text(svg, encoding="utf-8")
