"""Configuration module for mesh placement."""

from .settings import config

__all__ = ["config"]
