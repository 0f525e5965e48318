"""
structlog configuration shared by the library and the CLI

Events go through stdlib logging, so handlers (and the stream they write
to) are resolved when an event is emitted, not when logging is configured.
"""

import logging
import sys

import structlog

from .config import LOGGING_CONFIG


def _processors() -> list:
    return [
        structlog.contextvars.merge_contextvars,
        structlog.dev.ConsoleRenderer(colors=False),
    ]


def configure_library_logging() -> None:
    """WARNING-level default for library use; a no-op once logging is configured"""
    if structlog.is_configured():
        return
    structlog.configure(
        processors=_processors(),
        wrapper_class=structlog.make_filtering_bound_logger(logging.WARNING),
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def configure_logging(level: str | None = None) -> None:
    """Route structlog events to stderr at the requested level"""
    level_name = (level or LOGGING_CONFIG["level"]).upper()
    numeric_level = logging.getLevelName(level_name)
    if not isinstance(numeric_level, int):
        numeric_level = logging.WARNING

    logging.basicConfig(
        level=numeric_level,
        format=LOGGING_CONFIG["format"],
        stream=sys.stderr,
    )
    logging.getLogger("fusion_nilpotency").setLevel(numeric_level)
    structlog.configure(
        processors=_processors(),
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )
