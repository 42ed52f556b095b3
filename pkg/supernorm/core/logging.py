"""
Structured logging setup using structlog.
"""
import logging
import sys
from typing import Any

import structlog

from supernorm.core.config import settings


def configure_logging(level: str | None = None) -> None:
    """Configure structured logging on stderr so stdout stays CSV-only."""
    renderer: Any
    if settings.LOG_FORMAT.lower() == "console":
        renderer = structlog.dev.ConsoleRenderer(colors=False)
    else:
        renderer = structlog.processors.JSONRenderer(sort_keys=True)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, (level or settings.LOG_LEVEL).upper()),
        force=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger instance."""
    return structlog.get_logger(name)


def log_suite_event(
    logger: structlog.stdlib.BoundLogger,
    suite: str,
    status: str,
    **kwargs: Any,
) -> None:
    """Log a verification-suite event with structured data."""
    logger.info("suite_event", suite=suite, status=status, **kwargs)


def log_bound_event(logger: structlog.stdlib.BoundLogger, report: Any) -> None:
    """Log the outcome of an explicit-bound scan."""
    log = logger.info if report.all_hold else logger.warning
    log(
        "bound_checked",
        bound=report.bound_name,
        lo=report.range[0],
        hi=report.range[1],
        all_hold=report.all_hold,
        worst_margin=report.worst_margin,
        worst_at=report.worst_at,
    )
