"""
Binary portable graymap (P5) reader and writer, 8-bit only.

The writer always emits the canonical header "P5\\n<cols> <rows>\\n255\\n"
followed by the row-major payload, so read/write round trips are bit-exact.
"""

import os
from typing import Union

import numpy as np

from scancarrier.core.exceptions import ImageFormatError, ImageIOError
from scancarrier.core.models import Image
from scancarrier.utils.helpers import get_logger

logger = get_logger(__name__)

PathLike = Union[str, os.PathLike]

_WHITESPACE = b" \t\r\n\v\f"


def _header_fields(data: bytes):
    """
    Split the header into (magic, width, height, maxval) tokens.

    :return: The four tokens and the offset of the first payload byte
    """
    fields = []
    position = 0
    while len(fields) < 4:
        while position < len(data) and data[position] in _WHITESPACE:
            position += 1
        if position < len(data) and data[position] == ord("#"):
            while position < len(data) and data[position] not in b"\r\n":
                position += 1
            continue
        start = position
        while position < len(data) and data[position] not in _WHITESPACE + b"#":
            position += 1
        if start == position:
            raise ImageFormatError("header ends before width, height and maxval")
        fields.append(data[start:position].decode("ascii", errors="replace"))
        if len(fields) == 1 and fields[0] != "P5":
            if fields[0] in ("P1", "P2", "P3", "P4", "P6", "P7"):
                raise ImageFormatError(
                    f"unsupported variant {fields[0]}, only binary graymaps (P5) are read"
                )
            raise ImageFormatError(f"not a portable graymap (magic {fields[0]!r})")
    # exactly one whitespace byte separates maxval from the payload
    if position >= len(data) or data[position] not in _WHITESPACE:
        raise ImageFormatError("header is not followed by whitespace")
    return fields, position + 1


def read_pgm(path: PathLike) -> Image:
    """
    Read a binary graymap file.

    :raises ImageIOError: If the file cannot be opened
    :raises ImageFormatError: On a malformed header, maxval other than 255,
        or a payload shorter than rows * cols bytes
    """
    try:
        with open(path, "rb") as handle:
            data = handle.read()
    except OSError as exc:
        raise ImageIOError(f"cannot read {path}: {exc.strerror or exc}") from exc

    fields, offset = _header_fields(data)
    _, width, height, maxval = fields
    try:
        cols, rows, depth = int(width), int(height), int(maxval)
    except ValueError:
        raise ImageFormatError(f"non-numeric header field in {path}") from None
    if cols < 1 or rows < 1:
        raise ImageFormatError(f"image size {cols}x{rows} must be at least 1x1")
    if depth != 255:
        raise ImageFormatError(f"maxval {depth} not supported, only 8-bit (255)")

    size = rows * cols
    payload = data[offset:]
    if len(payload) < size:
        raise ImageFormatError(
            f"short read: {len(payload)} of {size} payload bytes in {path}"
        )
    if len(payload) > size:
        logger.warning(f"ignoring {len(payload) - size} trailing bytes in {path}")

    logger.info(f"read {cols}x{rows} graymap from {path}")
    return Image.from_flat(rows, cols, np.frombuffer(payload, dtype=np.uint8, count=size))


def encode_pgm(img: Image) -> bytes:
    """Canonical P5 bytes of `img`."""
    header = f"P5\n{img.cols} {img.rows}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def write_pgm(img: Image, path: PathLike) -> None:
    """
    Write `img` as a canonical binary graymap.

    :raises ImageIOError: If the file cannot be written
    """
    try:
        with open(path, "wb") as handle:
            handle.write(encode_pgm(img))
    except OSError as exc:
        raise ImageIOError(f"cannot write {path}: {exc.strerror or exc}") from exc
    logger.info(f"wrote {img.cols}x{img.rows} graymap to {path}")
