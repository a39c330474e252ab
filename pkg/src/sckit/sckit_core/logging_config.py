"""
Centralized logging configuration for SCKit (sample-compression-toolkit).

This module provides a unified logging interface that is shared by all
sckit_* packages so that boosting rounds, sparsification trials and CLI
studies log with the same format and destinations.

Console output goes to stderr: the CLI writes CSV/JSON results to stdout and
those must stay byte-stable. No log file is opened unless one is requested
explicitly or through ``SCKIT_LOG_FILE``.
"""

import logging
import os
import sys
from pathlib import Path
from typing import Dict, Optional

ROOT_LOGGER_NAME = "sckit"

_LEVEL_MAP = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

_ANSI_COLORS = {
    "DEBUG": "\033[36m",  # Cyan
    "INFO": "\033[32m",  # Green
    "WARNING": "\033[33m",  # Yellow
    "ERROR": "\033[31m",  # Red
    "CRITICAL": "\033[35m",  # Magenta
    "RESET": "\033[0m",
}

_PLAIN_MARKERS = {
    "DEBUG": "[DEBUG]",
    "INFO": "[INFO]",
    "WARNING": "[WARNING]",
    "ERROR": "[ERROR]",
    "CRITICAL": "[CRITICAL]",
    "RESET": "",
}


def _stream_supports_color(stream) -> bool:
    """Check whether a stream is an interactive terminal that renders ANSI colors."""
    if not hasattr(stream, "isatty") or not stream.isatty():
        return False
    if os.name == "nt":
        return True
    term = os.getenv("TERM", "")
    return term in ("xterm", "xterm-256color", "linux", "screen", "screen-256color") or (
        "color" in term
    )


class ColoredFormatter(logging.Formatter):
    """Formatter that decorates the level name with ANSI colors or a plain marker."""

    def __init__(self, fmt=None, datefmt=None, use_colors: Optional[bool] = None):
        super().__init__(fmt, datefmt)
        if use_colors is None:
            use_colors = _stream_supports_color(sys.stderr)
        self.use_colors = use_colors
        self.COLORS = dict(_ANSI_COLORS if use_colors else _PLAIN_MARKERS)

    def format(self, record):
        formatted = super().format(record)
        level_name = record.levelname
        if level_name not in self.COLORS:
            return formatted
        if self.use_colors:
            return formatted.replace(
                level_name, f"{self.COLORS[level_name]}{level_name}{self.COLORS['RESET']}"
            )
        return formatted.replace(level_name, f"{self.COLORS[level_name]} {level_name}")


class SCKitLogger:
    """Centralized logger for SCKit packages with consistent configuration."""

    _loggers: Dict[str, logging.Logger] = {}
    _default_level = logging.INFO
    _default_format = (
        "%(asctime)s - %(name)s - %(levelname)s [%(filename)s, %(lineno)d] - %(message)s"
    )
    _default_date_format = "%Y-%m-%d %H:%M:%S"
    _colors_enabled = True

    @classmethod
    def _make_formatter(cls, for_file: bool = False) -> logging.Formatter:
        if for_file or not cls._colors_enabled:
            return logging.Formatter(cls._default_format, cls._default_date_format)
        return ColoredFormatter(cls._default_format, cls._default_date_format)

    @classmethod
    def setup_global_config(
        cls,
        level: Optional[int] = None,
        log_file: Optional[Path] = None,
        console_output: bool = True,
        format_string: Optional[str] = None,
        date_format: Optional[str] = None,
    ) -> None:
        """
        Set up global logging configuration for all SCKit packages.

        Args:
            level: Global logging level (default: INFO)
            log_file: Optional log file path
            console_output: Whether to log to stderr (default: True)
            format_string: Custom log format string
            date_format: Custom date format string
        """
        if level is not None:
            cls._default_level = level
        if format_string is not None:
            cls._default_format = format_string
        if date_format is not None:
            cls._default_date_format = date_format

        cls._apply_environment()

        root_logger = logging.getLogger(ROOT_LOGGER_NAME)
        root_logger.setLevel(cls._default_level)
        root_logger.handlers.clear()

        if console_output and os.getenv("SCKIT_LOG_CONSOLE", "true").lower() != "false":
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(cls._default_level)
            console_handler.setFormatter(cls._make_formatter())
            root_logger.addHandler(console_handler)

        env_log_file = os.getenv("SCKIT_LOG_FILE")
        if log_file is None and env_log_file:
            log_file = Path(env_log_file)
        if log_file is not None:
            cls._attach_file_handler(root_logger, Path(log_file), cls._default_level)

        # Cached child loggers propagate to the root, so they pick up the new handlers.
        for logger in cls._loggers.values():
            logger.setLevel(cls._default_level)

    @classmethod
    def _apply_environment(cls) -> None:
        """Read SCKIT_LOG_LEVEL / SCKIT_LOG_COLORS from the environment."""
        env_level = os.getenv("SCKIT_LOG_LEVEL", "").upper()
        if env_level in _LEVEL_MAP:
            cls._default_level = _LEVEL_MAP[env_level]

        env_colors = os.getenv("SCKIT_LOG_COLORS", "true").lower()
        cls._colors_enabled = env_colors != "false" and _stream_supports_color(sys.stderr)

    @classmethod
    def _attach_file_handler(cls, logger: logging.Logger, log_file: Path, level: int) -> None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        if any(
            isinstance(h, logging.FileHandler)
            and Path(h.baseFilename).resolve() == log_file.resolve()
            for h in logger.handlers
        ):
            return
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(cls._make_formatter(for_file=True))
        logger.addHandler(file_handler)

    @classmethod
    def get_logger(cls, name: Optional[str] = None) -> logging.Logger:
        """
        Get a logger instance for the specified name.

        Loggers outside the ``sckit`` namespace are re-rooted under it so that
        they share the package handlers.

        Args:
            name: Logger name, usually ``__name__`` of the calling module

        Returns:
            Logger instance with SCKit configuration
        """
        if not name:
            name = ROOT_LOGGER_NAME
        elif name != ROOT_LOGGER_NAME and not name.startswith(ROOT_LOGGER_NAME + "."):
            name = f"{ROOT_LOGGER_NAME}.{name}"

        if name in cls._loggers:
            return cls._loggers[name]

        logger = logging.getLogger(name)
        if logger.level == logging.NOTSET:
            logger.setLevel(cls._default_level)
        cls._loggers[name] = logger
        return logger

    @classmethod
    def set_level(cls, level: int) -> None:
        """Set the logging level for every SCKit logger and handler."""
        cls._default_level = level
        for logger in cls._loggers.values():
            logger.setLevel(level)
        root_logger = logging.getLogger(ROOT_LOGGER_NAME)
        root_logger.setLevel(level)
        for handler in root_logger.handlers:
            handler.setLevel(level)

    @classmethod
    def add_file_handler(cls, log_file: Path, level: Optional[int] = None) -> None:
        """Add a file handler to the package root logger."""
        cls._attach_file_handler(
            logging.getLogger(ROOT_LOGGER_NAME),
            Path(log_file),
            cls._default_level if level is None else level,
        )

    @classmethod
    def enable_colors(cls) -> None:
        """Enable colored console output."""
        cls._colors_enabled = True
        cls._refresh_console_formatters()

    @classmethod
    def disable_colors(cls) -> None:
        """Disable colored console output."""
        cls._colors_enabled = False
        cls._refresh_console_formatters()

    @classmethod
    def _refresh_console_formatters(cls) -> None:
        for handler in logging.getLogger(ROOT_LOGGER_NAME).handlers:
            if isinstance(handler, logging.StreamHandler) and not isinstance(
                handler, logging.FileHandler
            ):
                handler.setFormatter(cls._make_formatter())


# Initialize global configuration
SCKitLogger.setup_global_config()
