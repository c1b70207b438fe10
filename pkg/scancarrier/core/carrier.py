"""
Carrier images from alphanumeric keywords via the 4-out-of-8 code.

Each codeword is a byte with two 1-bits in each nibble; there are exactly
C(4,2) * C(4,2) = 36 of them, one per letter pair (A/a .. Z/z) and digit.
A keyword is mapped character by character and tiled row-major over the
image.
"""

import functools
from typing import List, Optional, Union

import numpy as np

from scancarrier.core.exceptions import KeywordError
from scancarrier.core.models import CodeEntry, CodeTable, Image, Keyword

# fmt: off
FOUR_OF_EIGHT_CODE = (
    ("Aa", 0b00110011), ("Bb", 0b00110101), ("Cc", 0b00110110),
    ("Dd", 0b00111001), ("Ee", 0b00111010), ("Ff", 0b00111100),
    ("Gg", 0b01010011), ("Hh", 0b01010101), ("Ii", 0b01010110),
    ("Jj", 0b01011001), ("Kk", 0b01011010), ("Ll", 0b01011100),
    ("Mm", 0b01100011), ("Nn", 0b01100101), ("Oo", 0b01100110),
    ("Pp", 0b01101001), ("Qq", 0b01101010), ("Rr", 0b01101100),
    ("Ss", 0b10010011), ("Tt", 0b10010101), ("Uu", 0b10010110),
    ("Vv", 0b10011001), ("Ww", 0b10011010), ("Xx", 0b10011100),
    ("Yy", 0b10100011), ("Zz", 0b10100101),
    ("0", 0b10100110), ("1", 0b10101001), ("2", 0b10101010),
    ("3", 0b10101100), ("4", 0b11000011), ("5", 0b11000101),
    ("6", 0b11000110), ("7", 0b11001001), ("8", 0b11001010),
    ("9", 0b11001100),
)
# fmt: on


@functools.lru_cache(maxsize=None)
def code_table() -> CodeTable:
    """The 36 code entries in table order (A/a first, 9 last)."""
    return CodeTable(
        entries=[
            CodeEntry(characters=characters, codeword=codeword)
            for characters, codeword in FOUR_OF_EIGHT_CODE
        ]
    )


def codeword(ch: str, position: Optional[int] = None) -> int:
    """
    Codeword of one alphanumeric character, letters case-insensitive.

    :param ch: Single character
    :param position: Index of `ch` inside its keyword, used in the error message
    :raises KeywordError: If `ch` is not a letter or digit
    """
    value = code_table().lookup(ch) if len(ch) == 1 else None
    if value is None:
        where = f" at position {position}" if position is not None else ""
        raise KeywordError(f"character {ch!r}{where} is not alphanumeric")
    return value


def _text(kw: Union[Keyword, str]) -> str:
    return kw.text if isinstance(kw, Keyword) else kw


def keyword_bytes(kw: Union[Keyword, str]) -> List[int]:
    """
    Codewords of every keyword character, in order.

    :raises KeywordError: empty keyword or non-alphanumeric character
    """
    text = _text(kw)
    if not text:
        raise KeywordError("keyword must not be empty")
    return [codeword(ch, position) for position, ch in enumerate(text)]


def build_carrier(kw: Union[Keyword, str], rows: int, cols: int) -> Image:
    """
    Carrier image of `rows` x `cols`: the keyword's codewords repeated
    row-major and cut off at the last pixel.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"carrier must be at least 1x1, got {rows}x{cols}")
    stream = np.asarray(keyword_bytes(kw), dtype=np.uint8)
    return Image(pixels=np.resize(stream, rows * cols).reshape(rows, cols))
