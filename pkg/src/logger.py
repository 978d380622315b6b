import logging

from rich.console import Console
from rich.logging import RichHandler

# Reports go to stdout, everything human-facing to stderr.
console = Console(stderr=True)

ROOT_LOGGER = "setcolour"


def setup_logging(level: str = "WARNING") -> logging.Logger:
    """Configures rich logging for the whole ``setcolour`` hierarchy."""
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level.upper())
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=console, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
