import logging
import os
import sys
import uuid
from datetime import datetime
from pathlib import Path

import structlog

from .config import RunConfig

RUN_CONTEXT_KEYS = ("run_id", "command", "scheme")


def add_run_context(_, __, event_dict):
    context = structlog.contextvars.get_contextvars()
    for key in RUN_CONTEXT_KEYS:
        if key not in event_dict and context.get(key) is not None:
            event_dict[key] = context[key]
    return event_dict


def new_run_id() -> str:
    return uuid.uuid4().hex[:8]


def configure_logging(
    config: RunConfig,
    level: str | None = None,
    run_id: str | None = None,
    log_dir: Path = Path("logs"),
) -> Path:
    """Configure structlog on top of stdlib logging; returns the log file path."""
    level = (level or config.log_level).upper()
    run_id = run_id or new_run_id()

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
            structlog.contextvars.merge_contextvars,
            add_run_context,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    console_formatter = structlog.stdlib.ProcessorFormatter(
        processor=structlog.dev.ConsoleRenderer(),
    )
    file_formatter = structlog.stdlib.ProcessorFormatter(
        processor=structlog.processors.JSONRenderer(),
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers = []

    # stderr keeps stdout free for the summary tables
    if config.log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(console_formatter)
        root_logger.addHandler(console_handler)

    os.makedirs(log_dir, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    log_filename = Path(log_dir) / f"cevsim_{timestamp}_{run_id}.log"
    file_handler = logging.FileHandler(filename=log_filename, encoding="utf-8")
    file_handler.setLevel(level)
    file_handler.setFormatter(file_formatter)
    root_logger.addHandler(file_handler)

    root_logger.propagate = False
    return log_filename
