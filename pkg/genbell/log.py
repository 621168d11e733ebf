import logging

from rich.console import Console
from rich.logging import RichHandler


def setup(level: str = "WARNING") -> None:
    """Route log records to stderr through rich

    Args:
        level (str, optional): Logging level name. Defaults to "WARNING".
    """
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def debug() -> None:
    setup("DEBUG")
