# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser, Namespace
from dataclasses import dataclass, field
from pathlib import Path

from ._windows import Detection, detect
from .._common import (
    HamflowCliResult,
    artifact_comment,
    load_model,
    print_cli_result,
    run_config_from_args,
)
from ..._tables import write_csv
from ...landscape import load_scalar_field
from ...streamline import render_svg_overlay

DETECTION_HEADER = ("x", "y", "w", "h", "margin")


@dataclass
class DetectResult(HamflowCliResult):
    windows: int
    detections: list[Detection] = field(default_factory=list)
    csv: str = ""
    overlay: str = ""

    def __str__(self) -> str:
        found = "\n".join(
            f"  ({d.x}, {d.y}) {d.w}x{d.h} margin {d.margin:+.4f}" for d in self.detections
        )
        return f"""
--- Detection ---

{self.message}

{found}
Detections: {self.csv}
Overlay: {self.overlay}
"""


def add_detect_arguments(detect_parser: ArgumentParser) -> None:
    detect_parser.add_argument(
        "image",
        type=Path,
        action="store",
        help="The image to scan.",
    )
    detect_parser.add_argument(
        "--bank",
        type=Path,
        metavar="PATH",
        help="A feature bank JSON to use instead of the one the model references.",
    )
    detect_parser.add_argument(
        "--out-prefix",
        type=Path,
        required=True,
        metavar="PREFIX",
        help="Outputs are written to PREFIX.detections.csv and PREFIX.svg.",
    )
    detect_parser.add_argument(
        "--svg-scale",
        type=float,
        default=1.0,
        help="Pixels per image pixel in the SVG overlay.",
    )


@print_cli_result
def do_detect(args: Namespace) -> HamflowCliResult:
    """
    Sliding-window detection with the window scale, stride and suppression overlap taken
    from the run configuration.
    """
    # Raises: UsageError
    config = run_config_from_args(args)
    # Raises: DataError
    bundle = load_model(args.model, args.bank)
    # Raises: DataError
    image = load_scalar_field(args.image)
    detections, scanned = detect(
        bundle,
        image,
        scale_factor=config.scale_factor,
        stride=config.window_stride,
        max_iou=config.nms_iou,
        threads=config.threads,
    )

    prefix = Path(args.out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    csv_path = prefix.with_name(prefix.name + ".detections.csv")
    overlay = prefix.with_name(prefix.name + ".svg")
    write_csv(
        csv_path,
        DETECTION_HEADER,
        ([d.x, d.y, d.w, d.h, d.margin] for d in detections),
        artifact_comment(config),
    )
    overlay.write_text(
        render_svg_overlay(
            image,
            (),
            scale=args.svg_scale,
            comment=artifact_comment(config),
            boxes=[tuple(d.box) for d in detections],
        ),
        encoding="utf-8",
    )
    return DetectResult(
        status="success",
        message=f"{len(detections)} detections in {scanned} windows.",
        windows=scanned,
        detections=detections,
        csv=str(csv_path),
        overlay=str(overlay),
    )
