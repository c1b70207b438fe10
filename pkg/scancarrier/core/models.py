import re
from enum import Enum
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PrivateAttr,
    field_validator,
    model_validator,
)

_ALPHANUMERIC = re.compile(r"[A-Za-z0-9]")


class ScanPattern(str, Enum):
    RASTER = "C"  # continuous raster
    DIAGONAL = "D"  # continuous diagonal
    ORTHOGONAL = "O"  # continuous orthogonal
    SPIRAL = "S"

    def __str__(self):
        return self.value


class ScanSpec(BaseModel):
    """A base scan pattern together with one of its eight transformations."""

    model_config = ConfigDict(frozen=True)

    pattern: ScanPattern
    transform: int = Field(ge=0, le=7)

    def __str__(self):
        return f"{self.pattern.value}{self.transform}"


class ScanPath(BaseModel):
    """
    Explicit visiting order over a rows x cols grid.

    `order[k]` is the (row, col) cell visited at step k. Every cell of the grid
    appears exactly once.
    """

    model_config = ConfigDict(frozen=True)

    rows: int = Field(gt=0)
    cols: int = Field(gt=0)
    order: Tuple[Tuple[int, int], ...]

    _flat: np.ndarray = PrivateAttr(default=None)

    @model_validator(mode="after")
    def _check_permutation(self):
        size = self.rows * self.cols
        if len(self.order) != size:
            raise ValueError(
                f"path visits {len(self.order)} cells, grid has {size}"
            )
        cells = np.asarray(self.order, dtype=np.intp).reshape(-1, 2)
        inside = (
            (cells[:, 0] >= 0)
            & (cells[:, 0] < self.rows)
            & (cells[:, 1] >= 0)
            & (cells[:, 1] < self.cols)
        )
        if not inside.all():
            raise ValueError("path leaves the grid")
        flat = cells[:, 0] * self.cols + cells[:, 1]
        if np.bincount(flat, minlength=size).max() != 1:
            raise ValueError("path visits a cell more than once")
        return self

    @property
    def flat_indices(self) -> np.ndarray:
        """Row-major index of the cell visited at each step."""
        if self._flat is None:
            cells = np.asarray(self.order, dtype=np.intp).reshape(-1, 2)
            flat = cells[:, 0] * self.cols + cells[:, 1]
            flat.setflags(write=False)
            self._flat = flat
        return self._flat

    def __eq__(self, other):
        if not isinstance(other, ScanPath):
            return NotImplemented
        return (self.rows, self.cols, self.order) == (
            other.rows,
            other.cols,
            other.order,
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.order))


class InversePath(BaseModel):
    """Cell -> step mapping of a ScanPath, stored row-major."""

    model_config = ConfigDict(frozen=True)

    rows: int = Field(gt=0)
    cols: int = Field(gt=0)
    positions: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_permutation(self):
        size = self.rows * self.cols
        if sorted(self.positions) != list(range(size)):
            raise ValueError("positions must be a permutation of 0..rows*cols-1")
        return self

    def position(self, row: int, col: int) -> int:
        return self.positions[row * self.cols + col]


class Image(BaseModel):
    """Rectangular 8-bit grayscale image. Pixels are a read-only uint8 array."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pixels: np.ndarray

    @field_validator("pixels", mode="before")
    @classmethod
    def _as_grayscale(cls, value):
        array = np.array(value)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError("pixels must form a non-empty 2-D grid")
        if array.dtype != np.uint8:
            if not np.issubdtype(array.dtype, np.integer):
                raise ValueError(f"pixels must be integers, got {array.dtype}")
            if array.min() < 0 or array.max() > 255:
                raise ValueError("pixel values must lie in 0..255")
            array = array.astype(np.uint8)
        array.setflags(write=False)
        return array

    @classmethod
    def from_rows(cls, rows: List[List[int]]) -> "Image":
        return cls(pixels=rows)

    @classmethod
    def from_flat(cls, rows: int, cols: int, pixels) -> "Image":
        flat = np.asarray(pixels)
        if flat.size != rows * cols:
            raise ValueError(
                f"expected {rows * cols} pixels for {rows}x{cols}, got {flat.size}"
            )
        return cls(pixels=flat.reshape(rows, cols))

    @property
    def rows(self) -> int:
        return self.pixels.shape[0]

    @property
    def cols(self) -> int:
        return self.pixels.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.pixels.shape

    def to_rows(self) -> List[List[int]]:
        return self.pixels.tolist()

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    __hash__ = None


class Keyword(BaseModel):
    """Alphanumeric carrier keyword."""

    model_config = ConfigDict(frozen=True)

    text: str

    @field_validator("text")
    @classmethod
    def _alphanumeric(cls, value: str) -> str:
        if not value:
            raise ValueError("keyword must not be empty")
        for position, ch in enumerate(value):
            if not _ALPHANUMERIC.fullmatch(ch):
                raise ValueError(
                    f"character {ch!r} at position {position} is not alphanumeric"
                )
        return value

    def __str__(self):
        return self.text


class CodeEntry(BaseModel):
    """One row of the 4-out-of-8 code: a character class and its byte."""

    model_config = ConfigDict(frozen=True)

    characters: str
    codeword: int = Field(ge=0, le=255)

    @field_validator("characters")
    @classmethod
    def _character_class(cls, value: str) -> str:
        if len(value) == 1 and value.isdigit() and value.isascii():
            return value
        if (
            len(value) == 2
            and value.isascii()
            and value[0].isupper()
            and value[1] == value[0].lower()
        ):
            return value
        raise ValueError(
            f"{value!r} must be a digit or an uppercase/lowercase letter pair"
        )

    @field_validator("codeword")
    @classmethod
    def _four_of_eight(cls, value: int) -> int:
        high, low = value >> 4, value & 0x0F
        if bin(high).count("1") != 2 or bin(low).count("1") != 2:
            raise ValueError(
                f"codeword {value:08b} must carry two 1-bits in each nibble"
            )
        return value


class CodeTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: Tuple[CodeEntry, ...]

    _by_character: Dict[str, int] = PrivateAttr(default_factory=dict)
    _by_codeword: Dict[int, str] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _complete_code(self):
        if len(self.entries) != 36:
            raise ValueError(f"expected 36 entries, got {len(self.entries)}")
        codewords = [entry.codeword for entry in self.entries]
        if len(set(codewords)) != len(codewords):
            raise ValueError("codewords must be pairwise distinct")
        return self

    def _index(self):
        if not self._by_character:
            for entry in self.entries:
                self._by_codeword[entry.codeword] = entry.characters
                for ch in entry.characters:
                    self._by_character[ch] = entry.codeword
        return self._by_character, self._by_codeword

    def lookup(self, ch: str) -> Optional[int]:
        """Codeword for `ch` (letters in either case), None outside the alphabet."""
        by_character, _ = self._index()
        return by_character.get(ch)

    def characters_for(self, codeword: int) -> Optional[str]:
        _, by_codeword = self._index()
        return by_codeword.get(codeword)

    def codewords(self) -> List[int]:
        return [entry.codeword for entry in self.entries]


# Pipeline expression tree


class Img(BaseModel):
    """The plaintext image leaf."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["img"] = "img"


class Key(BaseModel):
    """Carrier image generated from a keyword."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["key"] = "key"
    keyword: Keyword

    @field_validator("keyword", mode="before")
    @classmethod
    def _from_text(cls, value):
        if isinstance(value, str):
            return Keyword(text=value)
        return value


class Scan(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["scan"] = "scan"
    spec: ScanSpec
    child: "PipelineExpr"


class Add(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["add"] = "add"
    left: "PipelineExpr"
    right: "PipelineExpr"


PipelineExpr = Annotated[Union[Img, Key, Scan, Add], Field(discriminator="kind")]

Scan.model_rebuild()
Add.model_rebuild()


class Diagnostic(BaseModel):
    """A reason why a pipeline cannot be decrypted, anchored at one node."""

    model_config = ConfigDict(frozen=True)

    node_path: str  # e.g. "root.left.child"
    node: str  # canonical text of the offending node
    message: str

    def __str__(self):
        return f"{self.node_path} `{self.node}`: {self.message}"


class ValidationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    diagnostics: Tuple[Diagnostic, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def __bool__(self):
        return self.ok


class PresetVariant(str, Enum):
    A = "A"  # scan(img)
    B = "B"  # add(img, key)
    C = "C"  # add(scan(img), key)
    D = "D"  # add(img, scan(key))
    E = "E"  # scan(add(scan(img), scan(key)))

    def __str__(self):
        return self.value


class Direction(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"

    def __str__(self):
        return self.value


class MetricsReport(BaseModel):
    """Distortion measurements of one image, optionally against a reference."""

    rows: int
    cols: int
    histogram: List[int] = Field(min_length=256, max_length=256)
    entropy: float = Field(ge=0.0, le=8.0)
    # None marks an undefined coefficient (zero variance)
    correlations: Dict[Direction, Optional[float]]
    npcr: Optional[float] = Field(default=None, ge=0.0, le=100.0)
    uaci: Optional[float] = Field(default=None, ge=0.0, le=100.0)

    @model_validator(mode="after")
    def _consistent(self):
        if sum(self.histogram) != self.rows * self.cols:
            raise ValueError("histogram must count every pixel exactly once")
        for direction, value in self.correlations.items():
            if value is not None and not -1.0 <= value <= 1.0:
                raise ValueError(f"{direction} correlation {value} outside [-1, 1]")
        return self
