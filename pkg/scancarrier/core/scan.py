"""
SCAN-pattern permutations over image grids.

A path is applied with gather semantics: output pixel k (row-major) is the
input pixel at the k-th cell of the path. `unapply_path` scatters the pixels
back, so `unapply_path(apply_path(x, p), p) == x`.
"""

from typing import Union, overload

import numpy as np

from scancarrier.core.decorators import memoize_path
from scancarrier.core.exceptions import InvalidScanSpecError, ScanPathError
from scancarrier.core.models import Image, InversePath, ScanPath, ScanPattern, ScanSpec
from scancarrier.patterns import PatternRegistry


def parse_scan_spec(text: str) -> ScanSpec:
    """
    Parse a two-character spec such as "D0" or "S5".

    :raises InvalidScanSpecError: unknown letter or transform outside 0..7
    """
    if len(text) != 2:
        raise InvalidScanSpecError(
            f"scan spec {text!r} must be a pattern letter followed by one digit"
        )
    letter, digit = text[0], text[1]
    if letter not in PatternRegistry.letters():
        raise InvalidScanSpecError(
            f"unknown pattern letter {letter!r} in {text!r}, "
            f"expected one of {', '.join(PatternRegistry.letters())}"
        )
    if digit not in "01234567":
        raise InvalidScanSpecError(f"transform {digit!r} in {text!r} is outside 0..7")
    return ScanSpec(pattern=ScanPattern(letter), transform=int(digit))


@memoize_path(key_prefix="path:")
def generate_path(spec: ScanSpec, rows: int, cols: int) -> ScanPath:
    """
    Visiting order of `spec` over a rows x cols grid.

    :param spec: Pattern letter and transform
    :param rows: Grid height, at least 1
    :param cols: Grid width, at least 1
    :return: The ScanPath; for an odd transform it is the reverse of transform - 1
    """
    if rows < 1 or cols < 1:
        raise ScanPathError(f"grid must be at least 1x1, got {rows}x{cols}")
    pattern = PatternRegistry.get_pattern(spec.pattern)
    order = pattern.order(spec.transform, rows, cols)
    return ScanPath(rows=rows, cols=cols, order=order)


@overload
def invert_path(path: ScanPath) -> InversePath: ...


@overload
def invert_path(path: InversePath) -> ScanPath: ...


def invert_path(path: Union[ScanPath, InversePath]) -> Union[InversePath, ScanPath]:
    """
    Swap between the step -> cell view (ScanPath) and the cell -> step view
    (InversePath) of the same permutation.
    """
    if isinstance(path, ScanPath):
        positions = np.empty(path.rows * path.cols, dtype=np.intp)
        positions[path.flat_indices] = np.arange(positions.size)
        return InversePath(rows=path.rows, cols=path.cols, positions=positions.tolist())

    flat = np.empty(path.rows * path.cols, dtype=np.intp)
    flat[np.asarray(path.positions, dtype=np.intp)] = np.arange(flat.size)
    rows, cols = np.divmod(flat, path.cols)
    return ScanPath(
        rows=path.rows, cols=path.cols, order=list(zip(rows.tolist(), cols.tolist()))
    )


def _check_fits(img: Image, path: ScanPath) -> None:
    if img.shape != (path.rows, path.cols):
        raise ScanPathError(
            f"path for {path.rows}x{path.cols} cannot be applied to a "
            f"{img.rows}x{img.cols} image"
        )


def apply_path(img: Image, path: ScanPath) -> Image:
    """Read `img` along `path` and write the pixels out in raster order."""
    _check_fits(img, path)
    gathered = img.pixels.reshape(-1)[path.flat_indices]
    return Image(pixels=gathered.reshape(img.shape))


def unapply_path(img: Image, path: ScanPath) -> Image:
    """Inverse of `apply_path`: put raster pixel k back at cell `path.order[k]`."""
    _check_fits(img, path)
    scattered = np.empty(img.rows * img.cols, dtype=np.uint8)
    scattered[path.flat_indices] = img.pixels.reshape(-1)
    return Image(pixels=scattered.reshape(img.shape))
