"""Mesh router placement with a maximum-entropy genetic algorithm."""

__version__ = "0.1.0"
