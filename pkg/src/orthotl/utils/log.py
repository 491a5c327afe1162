"""Named loggers with the project-wide stderr format."""

import logging

LOG_FORMAT = "[%(asctime)s][%(levelname)s][%(name)s] %(message)s"

_level = logging.INFO


def set_level(level: int | str) -> None:
    """Change the level of every logger handed out so far, and of later ones."""
    global _level
    _level = logging.getLevelName(level) if isinstance(level, str) else level
    for name in list(logging.Logger.manager.loggerDict):
        if name == "orthotl" or name.startswith("orthotl."):
            logging.getLogger(name).setLevel(_level)


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(_level)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    if not logger.handlers:
        logger.addHandler(handler)
    logger.propagate = False
    return logger
