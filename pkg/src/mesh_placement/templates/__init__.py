"""SVG templates and bundled data."""

from .template_loader import TemplateLoader, template_loader

__all__ = ["template_loader", "TemplateLoader"]
