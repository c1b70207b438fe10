from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict

from scancarrier.core.carrier import build_carrier, keyword_bytes
from scancarrier.core.config import settings
from scancarrier.core.exceptions import PipelineValidationError, ScanCarrierError
from scancarrier.core.keylang import count_images, format_pipeline, validate_decryptable
from scancarrier.core.metrics import report
from scancarrier.core.models import (
    Add,
    Image,
    Img,
    Key,
    Keyword,
    MetricsReport,
    PipelineExpr,
    PresetVariant,
    Scan,
    ScanSpec,
)
from scancarrier.core.scan import apply_path, generate_path, parse_scan_spec, unapply_path
from scancarrier.utils.helpers import get_logger, require_same_shape

logger = get_logger(__name__)


def add_mod256(a: Image, b: Image) -> Image:
    """Pixel-wise (a + b) mod 256."""
    require_same_shape(a, b, "addition")
    # uint8 arithmetic wraps modulo 256
    return Image(pixels=a.pixels + b.pixels)


def sub_mod256(a: Image, b: Image) -> Image:
    """Pixel-wise (a - b) mod 256, the inverse of add_mod256."""
    require_same_shape(a, b, "subtraction")
    return Image(pixels=a.pixels - b.pixels)


def _require_decryptable(expr: PipelineExpr) -> None:
    result = validate_decryptable(expr)
    if not result.ok:
        raise PipelineValidationError(result.diagnostics)


def _evaluate(expr: PipelineExpr, img: Optional[Image], rows: int, cols: int) -> Image:
    if isinstance(expr, Img):
        return img
    if isinstance(expr, Key):
        return build_carrier(expr.keyword, rows, cols)
    if isinstance(expr, Scan):
        child = _evaluate(expr.child, img, rows, cols)
        logger.debug(f"scan {expr.spec} over {rows}x{cols}")
        return apply_path(child, generate_path(expr.spec, rows, cols))
    if isinstance(expr, Add):
        return add_mod256(
            _evaluate(expr.left, img, rows, cols),
            _evaluate(expr.right, img, rows, cols),
        )
    raise TypeError(f"not a pipeline node: {expr!r}")


def encrypt(img: Image, expr: PipelineExpr) -> Image:
    """
    Evaluate `expr` with `img` as the Img leaf.

    Carriers and scan paths are instantiated at the size of `img`.

    :raises PipelineValidationError: If `expr` could not be decrypted again
    """
    _require_decryptable(expr)
    logger.debug(f"encrypting {img.rows}x{img.cols} with {format_pipeline(expr)}")
    return _evaluate(expr, img, img.rows, img.cols)


def decrypt(img: Image, expr: PipelineExpr) -> Image:
    """
    Undo `encrypt(., expr)`, walking the plaintext-bearing spine from the
    root down: scans are unapplied, and each Add subtracts its key-only
    operand evaluated forward.

    :raises PipelineValidationError: If `expr` is not decryptable
    """
    _require_decryptable(expr)
    logger.debug(f"decrypting {img.rows}x{img.cols} with {format_pipeline(expr)}")
    rows, cols = img.rows, img.cols
    node, current = expr, img
    while not isinstance(node, Img):
        if isinstance(node, Scan):
            current = unapply_path(current, generate_path(node.spec, rows, cols))
            node = node.child
        else:
            if count_images(node.left):
                plain_side, key_side = node.left, node.right
            else:
                plain_side, key_side = node.right, node.left
            current = sub_mod256(current, _evaluate(key_side, None, rows, cols))
            node = plain_side
    return current


def _coerce_spec(spec: Union[ScanSpec, str, None]) -> ScanSpec:
    if spec is None:
        spec = settings.DEFAULT_SCAN
    return parse_scan_spec(spec) if isinstance(spec, str) else spec


def _coerce_keyword(kw: Union[Keyword, str, None]) -> Keyword:
    if kw is None:
        kw = settings.DEFAULT_KEYWORD
    if isinstance(kw, str):
        keyword_bytes(kw)  # KeywordError names the offending character
        return Keyword(text=kw)
    return kw


def preset_pipeline(
    variant: Union[PresetVariant, str],
    spec: Union[ScanSpec, str, None] = None,
    kw: Union[Keyword, str, None] = None,
) -> PipelineExpr:
    """
    One of the five preset pipelines:

    - A: scan(img)
    - B: add(img, key)
    - C: add(scan(img), key)
    - D: add(img, scan(key))
    - E: scan(add(scan(img), scan(key)))

    :param spec: Scan used by every scan stage, defaults to settings.DEFAULT_SCAN
    :param kw: Carrier keyword, defaults to settings.DEFAULT_KEYWORD
    """
    variant = PresetVariant(variant.upper() if isinstance(variant, str) else variant)
    spec, key = _coerce_spec(spec), Key(keyword=_coerce_keyword(kw))

    if variant is PresetVariant.A:
        return Scan(spec=spec, child=Img())
    if variant is PresetVariant.B:
        return Add(left=Img(), right=key)
    if variant is PresetVariant.C:
        return Add(left=Scan(spec=spec, child=Img()), right=key)
    if variant is PresetVariant.D:
        return Add(left=Img(), right=Scan(spec=spec, child=key))
    return Scan(
        spec=spec,
        child=Add(left=Scan(spec=spec, child=Img()), right=Scan(spec=spec, child=key)),
    )


class PresetRun(BaseModel):
    """Ciphertext and distortion report of one preset applied to one image"""

    model_config = ConfigDict(frozen=True)

    variant: PresetVariant
    pipeline: str
    ciphertext: Image
    report: MetricsReport


def reproduce(
    img: Image,
    spec: Union[ScanSpec, str, None] = None,
    kw: Union[Keyword, str, None] = None,
) -> Dict[PresetVariant, PresetRun]:
    """
    Encrypt `img` with all five presets and measure each ciphertext against it.

    :raises ScanCarrierError: If a ciphertext fails to decrypt back to `img`
    """
    runs = {}
    for variant in PresetVariant:
        expr = preset_pipeline(variant, spec, kw)
        ciphertext = encrypt(img, expr)
        if decrypt(ciphertext, expr) != img:
            raise ScanCarrierError(f"preset {variant} did not decrypt to the input")
        runs[variant] = PresetRun(
            variant=variant,
            pipeline=format_pipeline(expr),
            ciphertext=ciphertext,
            report=report(ciphertext, img),
        )
        logger.debug(f"preset {variant}: entropy {runs[variant].report.entropy:.6f}")
    return runs
