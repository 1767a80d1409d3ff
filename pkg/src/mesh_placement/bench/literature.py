"""Published coverage/connectivity/fitness values bundled for chart overlays."""

from typing import Optional

import pandas as pd

from ..templates import template_loader

LITERATURE_COLUMNS = ["sweep", "algorithm", "x", "coverage", "connectivity", "fitness"]


def literature_label() -> str:
    return template_loader.load_data("literature_values")["label"]


def load_literature(sweep: Optional[str] = None) -> pd.DataFrame:
    """Literature rows, optionally restricted to one sweep kind."""
    data = template_loader.load_data("literature_values")
    frame = pd.DataFrame(data["records"], columns=LITERATURE_COLUMNS)
    if sweep is not None:
        frame = frame[frame["sweep"] == sweep].reset_index(drop=True)
    return frame
