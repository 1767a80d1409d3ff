"""Configuration settings for the mesh placement toolkit."""

import os
from dataclasses import dataclass

from dotenv import load_dotenv


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        return default


@dataclass
class RuntimeSettings:
    """Process-level execution settings."""

    workers: int = None

    def __post_init__(self):
        if self.workers is None:
            self.workers = _env_int("MESH_PLACEMENT_WORKERS", os.cpu_count() or 1)
        self.workers = max(1, self.workers)


@dataclass
class NetworkSettings:
    """Geometric network model settings."""

    # above this many client-router pairs the spatial grid replaces the dense path
    dense_pair_limit: int = 20000


@dataclass
class LoggingSettings:
    """Logging configuration."""

    log_level: str = None
    log_dir: str = None
    progress_interval: int = 100  # generations
    max_log_entries: int = 1000

    def __post_init__(self):
        if self.log_level is None:
            self.log_level = os.getenv("MESH_PLACEMENT_LOG_LEVEL", "INFO").upper()
        if self.log_dir is None:
            self.log_dir = os.getenv("MESH_PLACEMENT_LOG_DIR") or None


@dataclass
class BenchSettings:
    """Benchmark CLI defaults."""

    output_dir: str = None
    svg_size: int = 800  # pixels, longer side
    record_timing: bool = False

    def __post_init__(self):
        if self.output_dir is None:
            self.output_dir = os.getenv("MESH_PLACEMENT_OUTPUT_DIR", "results")


class Config:
    """Main configuration class."""

    def __init__(self):
        # Load environment variables from .env file
        load_dotenv()

        self.runtime = RuntimeSettings()
        self.network = NetworkSettings()
        self.logging = LoggingSettings()
        self.bench = BenchSettings()

    @classmethod
    def load_from_env(cls):
        """Load configuration from environment variables."""
        return cls()


# Global config instance
config = Config()
