"""Run logging for optimizer and benchmark activities."""

import logging
import os
import sys
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from .config import config


class LogLevel(Enum):
    """Log levels for run activities."""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    RUN_START = "RUN_START"
    RUN_COMPLETE = "RUN_COMPLETE"


@dataclass
class RunLogEntry:
    """Log entry for a run activity."""

    timestamp: datetime
    component: str
    activity: str
    level: LogLevel
    details: Dict[str, Any]
    duration_ms: int = 0


class ColoredFormatter(logging.Formatter):
    """Console formatter with colors and emojis."""

    COLORS = {
        "DEBUG": "\033[36m",  # Cyan
        "INFO": "\033[32m",  # Green
        "WARNING": "\033[33m",  # Yellow
        "ERROR": "\033[31m",  # Red
        "ENDC": "\033[0m",
    }

    EMOJIS = {
        "DEBUG": "🔍",
        "INFO": "ℹ️",
        "WARNING": "⚠️",
        "ERROR": "❌",
    }

    def __init__(self, use_color: bool = True):
        super().__init__()
        self.use_color = use_color

    def format(self, record):
        level = record.levelname
        emoji = self.EMOJIS.get(level, "•")
        timestamp = datetime.fromtimestamp(record.created).strftime("%H:%M:%S")
        message = f"{emoji} [{timestamp}] {record.getMessage()}"
        if not self.use_color:
            return message
        return f"{self.COLORS.get(level, '')}{message}{self.COLORS['ENDC']}"


class FileFormatter(logging.Formatter):
    """Detailed formatter for file logging without ANSI codes."""

    def format(self, record):
        timestamp = datetime.fromtimestamp(record.created).strftime(
            "%Y-%m-%d %H:%M:%S.%f"
        )[:-3]
        return (
            f"[{timestamp}] [pid-{record.process}] [{record.levelname}] "
            f"{record.getMessage()}"
        )


class RunLogger:
    """Centralized logging system for optimizer runs and sweeps."""

    def __init__(self, log_level: str = "INFO", log_dir: Optional[str] = None):
        self.log_entries: List[RunLogEntry] = []
        self.active_runs: Dict[str, datetime] = {}
        self.file_handler: Optional[logging.FileHandler] = None
        self.log_file_path: Optional[Path] = None
        self.setup_console_logging(log_level)
        if log_dir:
            self.setup_file_logging(Path(log_dir))

    def setup_console_logging(self, log_level: str):
        """Setup console logging on stderr; stdout is kept for CLI results."""
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(getattr(logging, log_level, logging.INFO))
        console_handler.setFormatter(ColoredFormatter(use_color=sys.stderr.isatty()))

        self.logger = logging.getLogger("mesh_placement")
        self.logger.setLevel(logging.DEBUG)

        # Clear existing handlers to avoid duplicates
        self.logger.handlers.clear()
        self.logger.addHandler(console_handler)
        self.console_handler = console_handler

        # Prevent propagation to root logger
        self.logger.propagate = False

    def setup_file_logging(self, log_dir: Path):
        """Setup file-based logging indexed by process ID."""
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file_path = log_dir / f"mesh_placement_{os.getpid()}.log"

        file_handler = logging.FileHandler(log_file_path, mode="a", encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(FileFormatter())
        self.logger.addHandler(file_handler)

        self.file_handler = file_handler
        self.log_file_path = log_file_path
        self.logger.info("🗂️ LOGGING: File logging initialized - %s", log_file_path)

    def _record(self, entry: RunLogEntry):
        self.log_entries.append(entry)
        overflow = len(self.log_entries) - config.logging.max_log_entries
        if overflow > 0:
            del self.log_entries[:overflow]

    def log_run_start(
        self, component: str, activity: str, details: Dict[str, Any] = None
    ):
        """Log when a component starts an activity."""
        self.active_runs[component] = datetime.now()
        self._record(
            RunLogEntry(
                timestamp=datetime.now(),
                component=component,
                activity=activity,
                level=LogLevel.RUN_START,
                details=details or {},
            )
        )
        details_str = f" | {details}" if details else ""
        self.logger.info("🚀 %s STARTING: %s%s", component, activity, details_str)

    def log_run_complete(
        self, component: str, activity: str, details: Dict[str, Any] = None
    ):
        """Log when a component completes an activity."""
        start_time = self.active_runs.pop(component, None)
        duration_ms = 0
        if start_time:
            duration_ms = int((datetime.now() - start_time).total_seconds() * 1000)

        self._record(
            RunLogEntry(
                timestamp=datetime.now(),
                component=component,
                activity=activity,
                level=LogLevel.RUN_COMPLETE,
                details=details or {},
                duration_ms=duration_ms,
            )
        )
        duration_str = f" ({duration_ms}ms)" if duration_ms > 0 else ""
        details_str = f" | {details}" if details else ""
        self.logger.info(
            "✅ %s COMPLETED: %s%s%s", component, activity, duration_str, details_str
        )

    def log(
        self,
        level: LogLevel,
        component: str,
        message: str,
        details: Dict[str, Any] = None,
    ):
        """Log a plain message at the given level."""
        self._record(
            RunLogEntry(
                timestamp=datetime.now(),
                component=component,
                activity=message,
                level=level,
                details=details or {},
            )
        )
        self.logger.log(getattr(logging, level.value), "%s: %s", component, message)

    def get_recent_logs(self, limit: int = 10) -> List[RunLogEntry]:
        """Get recent log entries."""
        return self.log_entries[-limit:]

    def get_logs_for_component(
        self, component: str, limit: int = 10
    ) -> List[RunLogEntry]:
        """Get recent logs for a specific component."""
        entries = [log for log in self.log_entries if log.component == component]
        return entries[-limit:]

    def clear_logs(self):
        """Clear all log entries."""
        self.log_entries.clear()
        self.active_runs.clear()

    def close_file_handler(self):
        """Close the file handler to ensure logs are written."""
        if self.file_handler is not None:
            self.file_handler.close()
            self.logger.removeHandler(self.file_handler)
            self.file_handler = None


# Global logger instance
run_logger = RunLogger(config.logging.log_level, config.logging.log_dir)


def log_run_start(component: str, activity: str, details: Dict[str, Any] = None):
    """Convenience function for logging a run start."""
    run_logger.log_run_start(component, activity, details)


def log_run_complete(component: str, activity: str, details: Dict[str, Any] = None):
    """Convenience function for logging a run completion."""
    run_logger.log_run_complete(component, activity, details)


def log_info(component: str, message: str, details: Dict[str, Any] = None):
    """Convenience function for logging info."""
    run_logger.log(LogLevel.INFO, component, message.replace("\n", " "), details)


def log_warning(component: str, message: str, details: Dict[str, Any] = None):
    """Convenience function for logging warnings."""
    run_logger.log(LogLevel.WARNING, component, message, details)


def log_error(component: str, message: str, details: Dict[str, Any] = None):
    """Convenience function for logging errors."""
    run_logger.log(LogLevel.ERROR, component, message, details)


def log_progress(component: str, generation: int, best: float, mean: float):
    """Log per-generation progress at debug level."""
    run_logger.logger.debug(
        "%s: generation %d best=%.4f mean=%.4f", component, generation, best, mean
    )


def get_recent_logs(limit: int = 10) -> List[RunLogEntry]:
    """Get recent log entries."""
    return run_logger.get_recent_logs(limit)


def close_file_handler():
    """Close the file handler to ensure logs are written."""
    run_logger.close_file_handler()
