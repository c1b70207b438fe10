import functools
import string
import time
from pathlib import Path

import numpy as np

from scancarrier.core.models import Add, Image, Img, Key, Scan, ScanPattern, ScanSpec

FIXTURES = Path(__file__).parent / "fixtures"

ALPHANUMERIC = string.ascii_letters + string.digits

ALL_SPECS = [
    ScanSpec(pattern=pattern, transform=transform)
    for pattern in ScanPattern
    for transform in range(8)
]


def timeit_return(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        result = func(*args, **kwargs)
        end_time = time.perf_counter()
        execution_time = end_time - start_time
        return result, execution_time  # return the result and execution time

    return wrapper


def random_image(rng, rows=8, cols=8) -> Image:
    return Image(pixels=rng.integers(0, 256, size=(rows, cols), dtype=np.uint8))


def random_spec(rng) -> ScanSpec:
    return ALL_SPECS[rng.integers(len(ALL_SPECS))]


def random_keyword(rng, max_length=8) -> str:
    length = int(rng.integers(1, max_length + 1))
    return "".join(ALPHANUMERIC[i] for i in rng.integers(len(ALPHANUMERIC), size=length))


def random_pipeline(rng, depth=5):
    """Any well-formed tree of at most `depth` levels, decryptable or not."""
    kinds = ["img", "key"] if depth <= 1 else ["img", "key", "scan", "add"]
    kind = kinds[rng.integers(len(kinds))]
    if kind == "img":
        return Img()
    if kind == "key":
        return Key(keyword=random_keyword(rng))
    if kind == "scan":
        return Scan(spec=random_spec(rng), child=random_pipeline(rng, depth - 1))
    return Add(left=random_pipeline(rng, depth - 1), right=random_pipeline(rng, depth - 1))


def random_key_tree(rng, depth=3):
    """A key leaf under zero or more scans."""
    if depth <= 1 or rng.random() < 0.4:
        return Key(keyword=random_keyword(rng))
    return Scan(spec=random_spec(rng), child=random_key_tree(rng, depth - 1))


def random_decryptable(rng, depth=5):
    """Tree with a single img leaf and key-only siblings along its spine."""
    choice = rng.random()
    if depth <= 1 or choice < 0.2:
        return Img()
    if choice < 0.6:
        return Scan(spec=random_spec(rng), child=random_decryptable(rng, depth - 1))
    spine, keys = random_decryptable(rng, depth - 1), random_key_tree(rng, depth - 1)
    if rng.random() < 0.5:
        return Add(left=spine, right=keys)
    return Add(left=keys, right=spine)
