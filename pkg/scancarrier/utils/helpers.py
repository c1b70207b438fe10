import logging

import numpy as np

from scancarrier.core.config import settings
from scancarrier.core.exceptions import ImageShapeError
from scancarrier.core.models import Image

_FORMATTER = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")


def get_logger(name: str) -> logging.Logger:
    """Module logger writing to stderr at the configured LOG_LEVEL"""
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(_FORMATTER)
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(settings.LOG_LEVEL)
    return logger


def set_log_level(level) -> None:
    """Apply `level` to every scancarrier logger created so far"""
    settings.configure(LOG_LEVEL=level)
    for name, logger in logging.root.manager.loggerDict.items():
        if name.startswith("scancarrier") and isinstance(logger, logging.Logger):
            logger.setLevel(level)


def require_same_shape(a: Image, b: Image, operation: str) -> None:
    if a.shape != b.shape:
        raise ImageShapeError(
            f"{operation} needs images of equal size, got "
            f"{a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )


def gradient_image(rows: int = 128, cols: int = 128, step: int = 2) -> Image:
    """Horizontal ramp: pixel = step * col mod 256, identical on every row."""
    ramp = (np.arange(cols, dtype=np.int64) * step) % 256
    return Image(pixels=np.tile(ramp, (rows, 1)))
