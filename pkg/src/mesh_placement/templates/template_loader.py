"""Template and bundled data file loader."""

import json
from pathlib import Path
from typing import Any, List, Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined, Template


class TemplateLoader:
    """Load SVG templates and bundled data files."""

    def __init__(self, base_path: Optional[Path] = None):
        """Initialize template loader with base path."""
        if base_path is None:
            self.base_path = Path(__file__).parent
        else:
            self.base_path = Path(base_path)

        self.jinja_env = Environment(
            loader=FileSystemLoader(str(self.base_path)),
            trim_blocks=True,
            lstrip_blocks=True,
            undefined=StrictUndefined,
            autoescape=True,
        )

    def load_svg_template(self, template_name: str) -> Template:
        """Load an SVG template file as Jinja2 template."""
        return self.jinja_env.get_template(f"svg/{template_name}.svg.j2")

    def load_data(self, data_name: str) -> Any:
        """Load a bundled JSON data file."""
        full_path = self.base_path / "data" / f"{data_name}.json"

        if not full_path.exists():
            raise FileNotFoundError(f"Data file not found: {full_path}")

        with open(full_path, "r", encoding="utf-8") as f:
            return json.load(f)

    def list_available_svg_templates(self) -> List[str]:
        """List all available SVG template names."""
        svg_dir = self.base_path / "svg"

        if not svg_dir.exists():
            return []

        return sorted(f.name[: -len(".svg.j2")] for f in svg_dir.glob("*.svg.j2"))


# Global template loader instance
template_loader = TemplateLoader()
