"""
Distortion measures for 8-bit grayscale images.

Correlation uses every adjacent pixel pair inside the image rather than a
random sample, so results are reproducible bit for bit.
"""

import math
from typing import List, Optional, Tuple, Union

import numpy as np

from scancarrier.core.exceptions import MetricsError
from scancarrier.core.models import Direction, Image, MetricsReport
from scancarrier.utils.helpers import require_same_shape


def histogram(img: Image) -> List[int]:
    """Count of each pixel value 0..255."""
    return np.bincount(img.pixels.reshape(-1), minlength=256).tolist()


def entropy(img: Image) -> float:
    """Shannon entropy in bits per pixel."""
    counts = np.bincount(img.pixels.reshape(-1), minlength=256)
    prob = counts[counts > 0] / img.pixels.size
    # + 0.0 turns the -0.0 of a constant image into 0.0
    return min(8.0, float(-np.sum(prob * np.log2(prob))) + 0.0)


def _adjacent_pairs(pixels: np.ndarray, direction: Direction) -> Tuple[np.ndarray, np.ndarray]:
    if direction is Direction.HORIZONTAL:
        return pixels[:, :-1], pixels[:, 1:]
    if direction is Direction.VERTICAL:
        return pixels[:-1, :], pixels[1:, :]
    return pixels[:-1, :-1], pixels[1:, 1:]


def adjacent_correlation(img: Image, direction: Union[Direction, str]) -> Optional[float]:
    """
    Pearson correlation of neighbouring pixels in `direction`.

    :return: Coefficient in [-1, 1], or None when either side has zero variance
    :raises MetricsError: If the image holds no pair in that direction
    """
    direction = Direction(direction)
    first, second = _adjacent_pairs(img.pixels, direction)
    if first.size == 0:
        raise MetricsError(
            f"a {img.rows}x{img.cols} image has no {direction} neighbour pairs"
        )
    x = first.reshape(-1).astype(np.float64)
    y = second.reshape(-1).astype(np.float64)
    dx, dy = x - x.mean(), y - y.mean()
    sxx, syy = float(np.dot(dx, dx)), float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        return None
    coefficient = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, coefficient))


def npcr_uaci(a: Image, b: Image) -> Tuple[float, float]:
    """
    Number of pixels change rate and unified average changing intensity.

    :return: (npcr, uaci), both percentages
    """
    require_same_shape(a, b, "NPCR/UACI")
    first = a.pixels.astype(np.int16)
    second = b.pixels.astype(np.int16)
    npcr = 100.0 * float(np.count_nonzero(first != second)) / first.size
    uaci = 100.0 * float(np.abs(first - second).mean()) / 255.0
    return npcr, uaci


def report(img: Image, reference: Optional[Image] = None) -> MetricsReport:
    """
    All metrics of `img`; NPCR and UACI only when a reference is given.
    Directions with no neighbour pairs are reported as undefined.
    """
    correlations = {}
    for direction in Direction:
        try:
            correlations[direction] = adjacent_correlation(img, direction)
        except MetricsError:
            correlations[direction] = None

    npcr = uaci = None
    if reference is not None:
        npcr, uaci = npcr_uaci(img, reference)

    return MetricsReport(
        rows=img.rows,
        cols=img.cols,
        histogram=histogram(img),
        entropy=entropy(img),
        correlations=correlations,
        npcr=npcr,
        uaci=uaci,
    )
