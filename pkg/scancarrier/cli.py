"""
Command-line surface.

    scancarrier encrypt   --input IN --output OUT (--pipeline EXPR | --preset {a..e} [--scan SPEC] [--key KEYWORD])
    scancarrier decrypt   --input IN --output OUT (--pipeline EXPR | --preset {a..e} [--scan SPEC] [--key KEYWORD])
    scancarrier metrics   --input IN [--reference REF] [--format {text,structured}]
    scancarrier scan-path --scan SPEC --rows R --cols C
    scancarrier carrier   --key KEYWORD --rows R --cols C --output OUT
    scancarrier presets   [--scan SPEC] [--key KEYWORD]
    scancarrier reproduce --input IN --output-dir DIR [--scan SPEC] [--key KEYWORD] [--format {text,structured}]

Exit codes: 0 success, 1 other failure, 2 usage or parse error, 3 I/O error,
4 pipeline validation error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from scancarrier.core.carrier import build_carrier
from scancarrier.core.cipher import decrypt, encrypt, preset_pipeline, reproduce
from scancarrier.core.config import settings
from scancarrier.core.exceptions import (
    ImageFormatError,
    ImageIOError,
    ImageShapeError,
    InvalidScanSpecError,
    KeywordError,
    PipelineSyntaxError,
    PipelineValidationError,
    ScanCarrierError,
    ScanPathError,
)
from scancarrier.core.keylang import format_pipeline, parse_pipeline
from scancarrier.core.metrics import report
from scancarrier.core.models import Direction, PresetVariant
from scancarrier.core.scan import generate_path, parse_scan_spec
from scancarrier.utils.helpers import get_logger, set_log_level
from scancarrier.utils.pgm import read_pgm, write_pgm
from scancarrier.utils.serializers import FORMATS, serialize

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4

PRESET_TAGS = [variant.value.lower() for variant in PresetVariant]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def _add_key_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scan", help="scan spec for preset stages, e.g. D0 (default from settings)")
    parser.add_argument("--key", help="carrier keyword for preset stages (default from settings)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scancarrier",
        description="SCAN-pattern and carrier-image encryption of 8-bit graymaps",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    for name in ("encrypt", "decrypt"):
        command = commands.add_parser(name, help=f"{name} a P5 graymap")
        command.add_argument("--input", required=True, type=Path)
        command.add_argument("--output", required=True, type=Path)
        source = command.add_mutually_exclusive_group(required=True)
        source.add_argument("--pipeline", help='pipeline expression, e.g. "scan(D0, img)"')
        source.add_argument("--preset", choices=PRESET_TAGS, type=str.lower)
        _add_key_options(command)

    command = commands.add_parser("metrics", help="distortion report of a graymap")
    command.add_argument("--input", required=True, type=Path)
    command.add_argument("--reference", type=Path, help="adds NPCR/UACI against this image")
    command.add_argument("--format", choices=FORMATS, default=None)

    command = commands.add_parser("scan-path", help="print a scan order, one 'row col' per line")
    command.add_argument("--scan", required=True)
    command.add_argument("--rows", required=True, type=_positive_int)
    command.add_argument("--cols", required=True, type=_positive_int)

    command = commands.add_parser("carrier", help="write the carrier image of a keyword")
    command.add_argument("--key", required=True)
    command.add_argument("--rows", required=True, type=_positive_int)
    command.add_argument("--cols", required=True, type=_positive_int)
    command.add_argument("--output", required=True, type=Path)

    command = commands.add_parser("presets", help="print the five preset pipelines")
    _add_key_options(command)

    command = commands.add_parser(
        "reproduce", help="run every preset on one image and report the distortion"
    )
    command.add_argument("--input", required=True, type=Path)
    command.add_argument("--output-dir", required=True, type=Path)
    command.add_argument("--format", choices=FORMATS, default=None)
    _add_key_options(command)

    return parser


def _pipeline(args):
    if args.pipeline is not None:
        return parse_pipeline(args.pipeline)
    return preset_pipeline(args.preset, args.scan, args.key)


def _cmd_encrypt(args) -> int:
    expr = _pipeline(args)
    write_pgm(encrypt(read_pgm(args.input), expr), args.output)
    return EXIT_OK


def _cmd_decrypt(args) -> int:
    expr = _pipeline(args)
    write_pgm(decrypt(read_pgm(args.input), expr), args.output)
    return EXIT_OK


def _cmd_metrics(args) -> int:
    img = read_pgm(args.input)
    reference = read_pgm(args.reference) if args.reference is not None else None
    sys.stdout.write(serialize(report(img, reference), args.format or settings.METRICS_FORMAT))
    return EXIT_OK


def _cmd_scan_path(args) -> int:
    path = generate_path(parse_scan_spec(args.scan), args.rows, args.cols)
    sys.stdout.write("".join(f"{r} {c}\n" for r, c in path.order))
    return EXIT_OK


def _cmd_carrier(args) -> int:
    write_pgm(build_carrier(args.key, args.rows, args.cols), args.output)
    return EXIT_OK


def _cmd_presets(args) -> int:
    for tag in PRESET_TAGS:
        print(f"{tag}: {format_pipeline(preset_pipeline(tag, args.scan, args.key))}")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    img = read_pgm(args.input)
    runs = reproduce(img, args.scan, args.key)
    try:
        args.output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ImageIOError(f"cannot create {args.output_dir}: {exc.strerror or exc}") from exc
    keyword = args.key or settings.DEFAULT_KEYWORD
    write_pgm(build_carrier(keyword, img.rows, img.cols), args.output_dir / "carrier.pgm")
    for variant, run in runs.items():
        write_pgm(run.ciphertext, args.output_dir / f"preset_{variant.value.lower()}.pgm")

    if (args.format or settings.METRICS_FORMAT) == "structured":
        document = {
            variant.value.lower(): {
                "pipeline": run.pipeline,
                "report": run.report.model_dump(mode="json"),
            }
            for variant, run in runs.items()
        }
        print(json.dumps(document))
        return EXIT_OK

    def number(value):
        return "undefined" if value is None else f"{value:.6f}"

    for variant, run in runs.items():
        correlations = run.report.correlations
        print(
            f"{variant.value.lower()}: {run.pipeline} "
            f"entropy={number(run.report.entropy)} "
            + "".join(
                f"{direction}={number(correlations.get(direction))} "
                for direction in Direction
            )
            + f"npcr={number(run.report.npcr)} uaci={number(run.report.uaci)}"
        )
    return EXIT_OK


COMMANDS = {
    "encrypt": _cmd_encrypt,
    "decrypt": _cmd_decrypt,
    "metrics": _cmd_metrics,
    "scan-path": _cmd_scan_path,
    "carrier": _cmd_carrier,
    "presets": _cmd_presets,
    "reproduce": _cmd_reproduce,
}


def _fail(code: int, message: str) -> int:
    logger.debug(f"exiting with {code}: {message}")
    print(f"scancarrier: error: {message}", file=sys.stderr)
    return code


def run_cli(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and return its exit code.

    :param argv: Arguments without the program name, defaults to sys.argv[1:]
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage or help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.verbose:
        set_log_level("DEBUG")

    try:
        return COMMANDS[args.command](args)
    except PipelineValidationError as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    except (
        PipelineSyntaxError,
        InvalidScanSpecError,
        KeywordError,
        ImageShapeError,
        ScanPathError,
        ValidationError,
    ) as exc:
        return _fail(EXIT_USAGE, str(exc))
    except (ImageIOError, ImageFormatError) as exc:
        return _fail(EXIT_IO, str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, f"{exc.filename or ''} {exc.strerror or exc}".strip())
    except ScanCarrierError as exc:
        return _fail(EXIT_FAILURE, str(exc))


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
